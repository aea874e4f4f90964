#include "burnside/cli.hpp"

#include <algorithm>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "burnside/cache.hpp"
#include "burnside/error.hpp"
#include "burnside/groups.hpp"
#include "burnside/verify.hpp"

namespace burnside::cli {

namespace {

struct Options {
  std::string group, gens, format = "table", cache_dir;
  std::size_t max_order = PermGroup::kDefaultOrderCap;
  int p = 0;
  std::string source = "1", target = "1", suite;
  int max_degree = -1;
  bool oracle = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Table = std::vector<std::vector<std::string>>;

/// Columns padded to their widest cell; the first column is left aligned and
/// the rest right aligned.
void print_table(std::ostream& out, const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c) line += "  ";
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string class_string(const Analysis& a, const std::vector<std::size_t>& members) {
  std::vector<std::string> names;
  for (auto i : members) names.push_back(a.labels()[i]);
  return "{" + join(names, ", ") + "}";
}

Analysis load(const Options& o) {
  if (o.group.empty() == o.gens.empty()) throw UsageError("give exactly one of --group and --gens");
  PermGroup g = o.group.empty() ? parse_group(o.gens, o.max_order) : parse_group(o.group, o.max_order);
  std::unique_ptr<MarksCache> cache;
  if (!o.cache_dir.empty()) cache = std::make_unique<MarksCache>(o.cache_dir);
  auto marks = cached_marks(g, cache.get());
  return Analysis(std::move(g), std::move(marks));
}

bool json_format(const Options& o) { return o.format == "json"; }

int cmd_marks(const Options& o, std::ostream& out) {
  const auto a = load(o);
  if (json_format(o)) {
    out << to_json(a.group(), a.marks()).dump(2) << '\n';
    return kOk;
  }
  out << "Table of marks of " << a.group().name() << " (order " << a.group().order() << ")\n";
  Table rows{{""}};
  for (const auto& l : a.labels()) rows[0].push_back(l);
  for (std::size_t h = 0; h < a.size(); ++h) {
    rows.push_back({"G/" + a.labels()[h]});
    for (std::size_t j = 0; j < a.size(); ++j) rows.back().push_back(std::to_string(a.marks()(h, j)));
  }
  print_table(out, rows);
  return kOk;
}

std::vector<PrimeEquivalence> partitions(const Analysis& a) {
  std::vector<PrimeEquivalence> out;
  for (int p : a.primes()) out.push_back(a.at(p).algebra.classes());
  return out;
}

int cmd_dmatrix(const Options& o, std::ostream& out) {
  const auto a = load(o);
  const auto parts = partitions(a);
  if (json_format(o)) {
    out << dmatrix_to_json(a.ring(), a.d(), parts).dump(2) << '\n';
    return kOk;
  }
  out << "Congruence numbers d(i, j) for " << a.group().name() << "\n";
  Table rows{{""}};
  for (const auto& l : a.labels()) rows[0].push_back(l);
  for (std::size_t i = 0; i < a.size(); ++i) {
    rows.push_back({a.labels()[i]});
    for (std::size_t j = 0; j < a.size(); ++j) rows.back().push_back(i == j ? "-" : a.d()(i, j).str());
  }
  print_table(out, rows);
  for (const auto& pe : parts) {
    std::vector<std::string> classes;
    for (const auto& c : pe.classes) classes.push_back(class_string(a, c));
    out << "p = " << pe.p << ": " << join(classes, " ") << '\n';
  }
  return kOk;
}

int cmd_blocks(const Options& o, std::ostream& out) {
  const auto a = load(o);
  const auto& data = a.at(o.p);
  if (json_format(o)) {
    out << blocks_to_json(a.ring(), data.algebra, data.blocks).dump(2) << '\n';
    return kOk;
  }
  out << "Blocks of A(" << a.group().name() << ") (x) F_" << o.p << ": " << data.blocks.size() << '\n';
  Table rows{{"class", "dim", "dim M/M^2", "socle", "symmetric", "bounded"}};
  for (std::size_t k = 0; k < data.blocks.size(); ++k) {
    const auto inv = block_invariants(data.blocks[k]);
    rows.push_back({class_string(a, data.algebra.classes().classes[k]), std::to_string(inv.dim),
                    std::to_string(inv.m_mod_m2_dim), std::to_string(inv.socle_dim),
                    inv.symmetric ? "yes" : "no", inv.tor_bounded ? "yes" : "no"});
  }
  print_table(out, rows);
  return kOk;
}

int cmd_homology(const Options& o, Functor functor, std::ostream& out) {
  const auto a = load(o);
  const int degree = o.max_degree < 0 ? 6 : o.max_degree;
  ReportOptions options;
  options.oracle = o.oracle;
  const auto i = a.index_of(o.source), j = a.index_of(o.target);
  const auto r = functor == Functor::Ext ? ext_report(a, i, j, degree, options)
                                         : tor_report(a, i, j, degree, options);
  if (json_format(o))
    out << to_json(r).dump(2) << '\n';
  else
    out << to_table(r);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto a = load(o);
  Verification v;
  if (o.suite == "squarefree") {
    v = verify_squarefree(a, o.max_degree < 0 ? 20 : o.max_degree);
  } else if (o.suite == "dress") {
    v = verify_dress(a);
  } else if (o.suite == "blocks") {
    v = verify_blocks(a);
  } else {
    const int degree = o.max_degree < 0 ? 3 : o.max_degree;
    if (degree > 3) throw UsageError("the oracle suite runs to degree 3 at most");
    v = verify_oracle(a, degree);
  }
  if (json_format(o)) {
    out << nlohmann::json{{"group", a.group().name()}, {"suite", o.suite},
                          {"verdict", to_string(v.verdict)}, {"checks", v.checks},
                          {"detail", v.detail}}
               .dump(2)
        << '\n';
  } else {
    out << o.suite << " on " << a.group().name() << ": " << to_string(v.verdict) << " (" << v.checks
        << " checks)\n";
    if (!v.detail.empty()) out << v.detail << '\n';
  }
  return v.verdict == Verdict::Fail ? kFailed : kOk;
}

int cmd_growth(const Options& o, std::ostream& out) {
  const auto a = load(o);
  const int degree = o.max_degree < 0 ? 8 : o.max_degree;
  const auto g = growth(a, a.index_of(o.source), a.index_of(o.target), o.p, degree);
  std::vector<std::int64_t> ranks(g.ranks.values.begin() + 1, g.ranks.values.end());
  const std::string verdict = g.bounded ? "bounded" : "unbounded";
  if (json_format(o)) {
    out << nlohmann::json{{"group", a.group().name()}, {"source", o.source}, {"target", o.target},
                          {"p", o.p}, {"ranks", ranks}, {"verdict", verdict}}
               .dump(2)
        << '\n';
    return kOk;
  }
  std::vector<std::string> parts;
  for (auto r : ranks) parts.push_back(std::to_string(r));
  out << "p-ranks of Ext^l(Z_" << o.source << ", Z_" << o.target << "), l = 1.." << degree << '\n';
  out << "ranks " << join(parts, ",") << '\n';
  out << "verdict " << verdict << '\n';
  return kOk;
}

bool usage_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UnknownName*>(&e) ||
         dynamic_cast<const InvalidLabel*>(&e) || dynamic_cast<const InvalidPrime*>(&e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Homological invariants of Burnside rings", "burnside"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--group", o.group, "Cn, Dn, Sn, An, Q8, V4, or cycles such as \"(1 2 3),(1 2)\"");
  app.add_option("--gens", o.gens, "generators in cycle notation, 1-based");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cache-dir", o.cache_dir, "directory caching marks tables")->envname("BURNSIDE_CACHE");
  app.add_option("--max-order", o.max_order, "largest group order accepted");

  auto* marks = app.add_subcommand("marks", "table of marks");
  auto* dmatrix = app.add_subcommand("dmatrix", "congruence numbers and ~p classes");
  auto* blocks = app.add_subcommand("blocks", "blocks of A(G) (x) F_p");
  blocks->add_option("-p", o.p, "prime")->required();

  auto add_pair = [&](CLI::App* sub, bool required) {
    auto* s = sub->add_option("--source", o.source, "class label of the source");
    auto* t = sub->add_option("--target", o.target, "class label of the target");
    if (required) {
      s->required();
      t->required();
    }
    sub->add_option("--max-degree", o.max_degree, "highest degree");
  };
  auto* ext = app.add_subcommand("ext", "Ext^l(Z_source, Z_target)");
  auto* tor = app.add_subcommand("tor", "Tor_l(Z_source, Z_target)");
  for (auto* sub : {ext, tor}) {
    add_pair(sub, true);
    sub->add_flag("--oracle", o.oracle, "compute degrees up to 3 with the integral oracle");
  }
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite")
      ->required()
      ->check(CLI::IsMember({"squarefree", "dress", "blocks", "oracle"}));
  verify->add_option("--max-degree", o.max_degree, "highest degree");
  auto* growth_cmd = app.add_subcommand("growth", "p-ranks of Ext^l(Z_source, Z_target)");
  growth_cmd->add_option("-p", o.p, "prime")->required();
  add_pair(growth_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (o.max_degree < -1) throw UsageError("--max-degree must be non-negative");
    if (marks->parsed()) return cmd_marks(o, out);
    if (dmatrix->parsed()) return cmd_dmatrix(o, out);
    if (blocks->parsed()) return cmd_blocks(o, out);
    if (ext->parsed()) return cmd_homology(o, Functor::Ext, out);
    if (tor->parsed()) return cmd_homology(o, Functor::Tor, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_growth(o, out);
  } catch (const UsageError& e) {
    err << "burnside: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "burnside: " << e.what() << '\n';
    return usage_error(e) ? kUsage : kFailed;
  } catch (const std::exception& e) {
    err << "burnside: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace burnside::cli
