#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gld/rational.hpp"

namespace gld {

/// Multi-index over the alphabet {0,...,m}; letter 0 is the time channel.
using Word = std::vector<int>;

std::string word_str(const Word& w);

/// Counting statistics of a word: nonzero letters n, zeros p,
/// size = n + 2p, and the alpha index size/n (infinite when n = 0).
struct WordStats {
  int n = 0;
  int p = 0;
  int size = 0;
  bool alpha_finite = false;
  Rational alpha{0};  // meaningful only when alpha_finite

  int length() const { return n + p; }
};

WordStats word_stats(const Word& w);

/// All words of length 1..r over {0..m}, ordered by length then
/// lexicographically, together with grades, flag dimensions and dilation
/// exponents. The word order fixes the coordinate layout of R^D used by
/// every other component.
class GradingTable {
 public:
  GradingTable(int m, int r, std::size_t word_cap);

  int m() const { return m_; }
  int r() const { return r_; }
  std::size_t word_count() const { return words_.size(); }

  const std::vector<Word>& words() const { return words_; }
  const std::vector<WordStats>& stats() const { return stats_; }

  /// Distinct finite alpha values, ascending; grades_[0] == 1 always.
  const std::vector<Rational>& grades() const { return grades_; }
  /// Dimension of the flag subspace at each grade; strictly increasing.
  const std::vector<int>& flag_dims() const { return flag_dims_; }

  std::size_t index_of(const Word& w) const;

  /// Dilation exponent gamma of word j at grade index k (0-based):
  /// (grade_k * n(J) - size(J))_+ as an exact rational.
  Rational gamma(std::size_t grade_idx, std::size_t word_idx) const;

  /// Reconstructed step function d(alpha): dimension of the flag space at
  /// the given alpha value (right continuous).
  int dim_at(const Rational& alpha) const;

  std::string to_json() const;
  static GradingTable from_json(const std::string& text);

 private:
  int m_;
  int r_;
  std::vector<Word> words_;
  std::vector<WordStats> stats_;
  std::vector<Rational> grades_;
  std::vector<int> flag_dims_;
};

/// Builds the grading table; throws SizeError when the enumeration would
/// exceed word_cap words (default 1e6).
GradingTable build_grading(int m, int r, std::size_t word_cap = 1'000'000);

/// Applies the dilation T_eta at grade index k to a coordinate vector of
/// length word_count(): component J is multiplied by eta^gamma(k, J).
std::vector<double> dilate(const GradingTable& table, std::size_t grade_idx, double eta,
                           std::span<const double> v);

}  // namespace gld
