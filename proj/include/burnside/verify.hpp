#pragma once

#include <string>

#include "burnside/ext_tor.hpp"

namespace burnside {

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

/// Outcome of a verification suite. A failure is a result, not an error;
/// `detail` names the first failing cell.
struct Verification {
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::size_t checks = 0;
};

/// For square-free |G|: Ext^l(Z_i, Z_j) = Ext^{l+2}(Z_i, Z_j) exactly for all
/// pairs and 1 <= l <= L - 2. NotApplicable otherwise.
Verification verify_squarefree(const Analysis& a, int max_degree);

/// p | d(i, j) iff O^p(H_i) and O^p(H_j) are conjugate, for every p | |G| and
/// every pair of classes.
Verification verify_dress(const Analysis& a);

/// For every p | |G| and the two least primes not dividing |G|: one block per
/// ~p class of the same dimension, semisimple when p does not divide |G|, and
/// when p^2 | |G| some block is neither symmetric nor bounded, while every
/// block is both for square-free |G|.
Verification verify_blocks(const Analysis& a);

/// Compares ext_report and tor_report with the integral oracle for every pair
/// in degrees 0..L: p-ranks, exact modules where claimed, exponent bounds,
/// vanishing p-part of Ext^1(Z_i, Z_i), and dim Ext_R(Z_i, k_j) against
/// dim Ext over R/pR.
Verification verify_oracle(const Analysis& a, int max_degree = 3);

/// p-ranks a_1..a_L of Ext^l(Z_i, Z_j) and whether they stay bounded, which
/// holds exactly when the block of i has dim M/M^2 <= 1 or i and j lie in
/// different blocks.
struct Growth {
  int p = 0;
  RankSequence ranks;
  bool bounded = true;
};
Growth growth(const Analysis& a, std::size_t i, std::size_t j, int p, int max_degree);

}  // namespace burnside
