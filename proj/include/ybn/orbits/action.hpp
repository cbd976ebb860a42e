#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybn/orbits/partition.hpp"
#include "ybn/ybe/solution.hpp"

namespace ybn::orbits {

using ybe::Letter;
using Word = std::vector<Letter>;

/// Base-m code, first letter most significant, so numeric order is lexicographic order.
std::uint64_t encode(const Word& w, std::size_t m);
Word decode(std::uint64_t code, std::size_t n, std::size_t m);
Word parse_word(const std::string& digits);
std::string word_string(const Word& w);

/// s_k acting on positions k, k+1 (1-based).
Word act(const ybe::SetSolution& s, std::size_t k, const Word& w);

struct OrbitReport {
  Word representative;  // lexicographically least member
  std::uint64_t size = 0;
  Partition lambda;
  Word lambda_element;
};

std::vector<Word> orbit_words(const ybe::SetSolution& s, const Word& w);
OrbitReport orbit(const ybe::SetSolution& s, const Word& w);

/// D^{k-1}(a) ... D(a) a
Word psi(const ybe::Diagonal& d, std::size_t k, Letter a);

struct PsiBlock {
  std::size_t start;
  std::size_t length;
  Letter base;  // last letter a of Psi_length(a)
  friend bool operator==(const PsiBlock&, const PsiBlock&) = default;
};

/// Split into maximal Psi-blocks.
std::vector<PsiBlock> psi_factorization(const ybe::Diagonal& d, const Word& w);

/// tau_u = tau_{u_last} o ... o tau_{u_first}
Letter tau_word(const ybe::SetSolution& s, const Word& u, Letter x);
Letter tau_word(const ybe::SetSolution& s, const Word& w, std::size_t begin, std::size_t end, Letter x);
/// sigma_u = sigma_{u_first} o ... o sigma_{u_last}
Letter sigma_word(const ybe::SetSolution& s, const Word& u, Letter y);
Letter sigma_word(const ybe::SetSolution& s, const Word& w, std::size_t begin, std::size_t end, Letter y);

/// Swaps the adjacent Psi-blocks left, right of w by the exchange formula.
Word exchange(const ybe::SetSolution& s, const ybe::Diagonal& d, const Word& w, const PsiBlock& left,
              const PsiBlock& right);

/// Generator positions (1-based) that carry w to exchange(w, left, right), applied in order.
std::vector<std::size_t> exchange_moves(const PsiBlock& left, const PsiBlock& right);

Word apply_moves(const ybe::SetSolution& s, Word w, const std::vector<std::size_t>& moves);

std::optional<Partition> is_lambda_element(const ybe::SetSolution& s, const ybe::Diagonal& d, const Word& w);
std::optional<Partition> is_lambda_element(const ybe::SetSolution& s, const Word& w);

struct LambdaClass {
  Partition lambda;
  Word element;
  std::vector<std::size_t> moves;  // apply_moves(w, moves) == element
};

LambdaClass lambda_classify(const ybe::SetSolution& s, const ybe::Diagonal& d, const Word& w);
LambdaClass lambda_classify(const ybe::SetSolution& s, const Word& w);

struct StabilizerReport {
  bool young_fixes = false;
  std::uint64_t transversal_size = 0;
  std::uint64_t distinct_images = 0;
  std::uint64_t expected_orbit_size = 0;
  bool ok() const { return young_fixes && distinct_images == expected_orbit_size; }
};

StabilizerReport stabilizer_report(const ybe::SetSolution& s, const Word& x);
bool stabilizer_check(const ybe::SetSolution& s, const Word& x);

}  // namespace ybn::orbits
