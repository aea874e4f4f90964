#include "burnside/verify.hpp"

#include <functional>

#include "burnside/error.hpp"
#include "burnside/linalg/fp.hpp"
#include "burnside/oracle.hpp"

namespace burnside {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not applicable";
  }
  return "";
}

namespace {

std::string pair_name(const Analysis& a, std::size_t i, std::size_t j) {
  return "(" + a.labels()[i] + ", " + a.labels()[j] + ")";
}

std::string module_name(const std::optional<AbelianGroup>& m) {
  return m ? m->to_string() : "undetermined";
}

/// Records a check; the first failure wins.
struct Recorder {
  Verification v;
  bool check(bool ok, const std::function<std::string()>& what) {
    ++v.checks;
    if (!ok && v.verdict == Verdict::Pass) {
      v.verdict = Verdict::Fail;
      v.detail = what();
    }
    return ok;
  }
};

}  // namespace

Verification verify_squarefree(const Analysis& a, int max_degree) {
  if (!a.square_free())
    return {Verdict::NotApplicable, "|G| = " + std::to_string(a.group().order()) + " is not square-free", 0};
  Recorder rec;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto r = ext_report(a, i, j, max_degree);
      for (int l = 1; l + 2 <= max_degree; ++l) {
        const auto& lo = r.at(l).module;
        const auto& hi = r.at(l + 2).module;
        rec.check(lo && hi && *lo == *hi, [&] {
          return "Ext^" + std::to_string(l) + pair_name(a, i, j) + " = " + module_name(lo) +
                 " but Ext^" + std::to_string(l + 2) + " = " + module_name(hi);
        });
      }
    }
  return rec.v;
}

Verification verify_dress(const Analysis& a) {
  Recorder rec;
  const auto& classes = a.marks().classes();
  for (int p : a.primes())
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        const bool divides = a.d()(i, j) % p == 0;
        const auto oi = classes.class_of(o_p(a.group(), classes[i].representative, p));
        const auto oj = classes.class_of(o_p(a.group(), classes[j].representative, p));
        rec.check(divides == (oi == oj), [&] {
          return "p = " + std::to_string(p) + ", pair " + pair_name(a, i, j) + ": d = " +
                 a.d()(i, j).str() + " but O^p classes are " +
                 (oi == oj ? "equal" : "different");
        });
      }
  return rec.v;
}

Verification verify_blocks(const Analysis& a) {
  Recorder rec;
  std::vector<int> primes = a.primes();
  for (int q = 2, extra = 0; extra < 2; ++q)
    if (fp::is_prime(q) && a.group().order() % static_cast<std::size_t>(q) != 0) {
      primes.push_back(q);
      ++extra;
    }
  const auto order = a.group().order();
  for (int p : primes) {
    const auto& data = a.at(p);
    const auto& cls = data.algebra.classes().classes;
    const std::string at_p = "p = " + std::to_string(p) + ": ";
    rec.check(data.blocks.size() == cls.size(), [&] {
      return at_p + std::to_string(data.blocks.size()) + " blocks for " +
             std::to_string(cls.size()) + " classes";
    });
    bool some_bad = false, all_good = true;
    for (std::size_t k = 0; k < data.blocks.size() && k < cls.size(); ++k) {
      const auto& b = data.blocks[k];
      rec.check(b.dim() == cls[k].size(), [&] {
        return at_p + "block " + std::to_string(k) + " has dimension " + std::to_string(b.dim()) +
               " for a class of size " + std::to_string(cls[k].size());
      });
      const auto inv = block_invariants(b);
      if (order % static_cast<std::size_t>(p) != 0)
        rec.check(b.dim() == 1, [&] { return at_p + "algebra is not semisimple"; });
      some_bad |= !inv.symmetric && !inv.tor_bounded;
      all_good &= inv.symmetric && inv.tor_bounded;
    }
    if (order % static_cast<std::size_t>(p * p) == 0)
      rec.check(some_bad, [&] { return at_p + "p^2 | |G| but every block is symmetric or bounded"; });
    if (a.square_free())
      rec.check(all_good, [&] {
        return at_p + "|G| is square-free but some block is not symmetric and bounded";
      });
  }
  return rec.v;
}

Verification verify_oracle(const Analysis& a, int max_degree) {
  Recorder rec;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto res = IntegralResolution::build(a.ring(), i, max_degree + 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto bound = exponent_bound(a, i, j);
      for (const auto functor : {Functor::Ext, Functor::Tor}) {
        const bool ext = functor == Functor::Ext;
        const auto exact = ext ? oracle_ext(res, j, max_degree) : oracle_tor(res, j, max_degree);
        const auto report = ext ? ext_report(a, i, j, max_degree) : tor_report(a, i, j, max_degree);
        const std::string name = ext ? "Ext^" : "Tor_";
        for (int l = 0; l <= max_degree; ++l) {
          const auto& truth = exact[static_cast<std::size_t>(l)];
          const auto& entry = report.at(l);
          const auto cell = [&] { return name + std::to_string(l) + pair_name(a, i, j); };
          if (entry.module)
            rec.check(*entry.module == truth, [&] {
              return cell() + ": report " + entry.module->to_string() + ", oracle " + truth.to_string();
            });
          for (int p : a.primes()) {
            std::int64_t rank = 0;
            for (const auto& part : entry.p_parts)
              if (part.p == p) rank = part.rank;
            if (l == 0) rank = entry.module->p_rank(p);
            rec.check(truth.p_rank(p) == rank, [&] {
              return cell() + ": p = " + std::to_string(p) + " rank " + std::to_string(rank) +
                     ", oracle " + std::to_string(truth.p_rank(p));
            });
          }
          if (l >= 1) {
            rec.check(truth.free_rank() == 0, [&] { return cell() + " is infinite"; });
            for (const auto& f : truth.invariant_factors())
              rec.check(bound % f == 0, [&] {
                return cell() + ": summand Z/" + f.str() + " exceeds the bound " + bound.str();
              });
          }
          if (ext && l == 1 && i == j)
            rec.check(truth.invariant_factors().empty(), [&] { return cell() + " is nonzero"; });
        }
      }
      for (int p : a.primes()) {
        const auto& data = a.at(p);
        const auto over_r = oracle_ext_mod_p(res, j, p, max_degree);
        const auto over_rbar = ext_dims_pair(data.algebra, data.blocks, i, j, max_degree, a.budget());
        rec.check(over_r == over_rbar, [&] {
          return "dim Ext_R(Z_i, k_j) differs from dim Ext over R/pR at p = " + std::to_string(p) +
                 " for " + pair_name(a, i, j);
        });
      }
    }
  }
  return rec.v;
}

Growth growth(const Analysis& a, std::size_t i, std::size_t j, int p, int max_degree) {
  Growth g;
  g.p = p;
  g.ranks = ext_ranks(a, i, j, p, max_degree);
  if (a.group().order() % static_cast<std::size_t>(p) == 0 && a.at(p).algebra.classes().related(i, j))
    g.bounded = block_invariants(a.block_of(p, i)).tor_bounded;
  return g;
}

}  // namespace burnside
