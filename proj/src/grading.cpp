#include "gld/grading.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

#include "gld/errors.hpp"

namespace gld {

using nlohmann::json;

std::string word_str(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (int letter : w) {
    if (letter < 0 || letter > 9) return "?";
    s.push_back(static_cast<char>('0' + letter));
  }
  return s;
}

WordStats word_stats(const Word& w) {
  if (w.empty()) throw ValidationError("word_stats: empty word");
  WordStats st;
  for (int letter : w) {
    if (letter < 0) throw ValidationError("word_stats: negative letter");
    if (letter == 0)
      ++st.p;
    else
      ++st.n;
  }
  st.size = st.n + 2 * st.p;
  st.alpha_finite = st.n > 0;
  if (st.alpha_finite) st.alpha = Rational(st.size, st.n);
  return st;
}

GradingTable::GradingTable(int m, int r, std::size_t word_cap) : m_(m), r_(r) {
  if (m < 1) throw ValidationError("build_grading: m must be >= 1");
  if (r < 1) throw ValidationError("build_grading: r must be >= 1");

  // D = sum_{k<=r} (m+1)^k, checked against the cap before allocating.
  std::size_t total = 0;
  std::size_t level = 1;
  for (int k = 1; k <= r; ++k) {
    if (level > word_cap / static_cast<std::size_t>(m + 1))
      throw SizeError("build_grading: word count exceeds cap");
    level *= static_cast<std::size_t>(m + 1);
    total += level;
    if (total > word_cap) throw SizeError("build_grading: word count exceeds cap");
  }

  words_.reserve(total);
  for (int k = 1; k <= r; ++k) {
    Word w(k, 0);
    while (true) {
      words_.push_back(w);
      int pos = k - 1;
      while (pos >= 0 && w[pos] == m) w[pos--] = 0;
      if (pos < 0) break;
      ++w[pos];
    }
  }

  stats_.reserve(words_.size());
  for (const auto& w : words_) stats_.push_back(word_stats(w));

  std::map<Rational, int> counts;
  for (const auto& st : stats_)
    if (st.alpha_finite) ++counts[st.alpha];
  int accum = 0;
  for (const auto& [alpha, count] : counts) {
    accum += count;
    grades_.push_back(alpha);
    flag_dims_.push_back(accum);
  }
}

std::size_t GradingTable::index_of(const Word& w) const {
  const int k = static_cast<int>(w.size());
  if (k < 1 || k > r_) throw ValidationError("index_of: word length out of range");
  std::size_t offset = 0;  // words shorter than k
  std::size_t level = 1;
  for (int len = 1; len < k; ++len) {
    level *= static_cast<std::size_t>(m_ + 1);
    offset += level;
  }
  std::size_t idx = 0;
  for (int letter : w) {
    if (letter < 0 || letter > m_) throw ValidationError("index_of: letter out of range");
    idx = idx * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(letter);
  }
  return offset + idx;
}

Rational GradingTable::gamma(std::size_t grade_idx, std::size_t word_idx) const {
  if (grade_idx >= grades_.size()) throw ValidationError("gamma: grade index out of range");
  if (word_idx >= words_.size()) throw ValidationError("gamma: word index out of range");
  const WordStats& st = stats_[word_idx];
  const Rational raw = static_cast<std::int64_t>(st.n) * grades_[grade_idx] -
                       Rational(static_cast<std::int64_t>(st.size));
  return raw > Rational(0) ? raw : Rational(0);
}

int GradingTable::dim_at(const Rational& alpha) const {
  int dim = 0;
  for (std::size_t k = 0; k < grades_.size(); ++k)
    if (grades_[k] <= alpha) dim = flag_dims_[k];
  return dim;
}

std::string GradingTable::to_json() const {
  json j;
  j["m"] = m_;
  j["r"] = r_;
  j["words"] = json::array();
  for (const auto& w : words_) j["words"].push_back(w);
  j["grades"] = json::array();
  for (const auto& g : grades_) j["grades"].push_back(g.str());
  j["flag_dims"] = flag_dims_;
  j["gamma"] = json::array();
  for (std::size_t k = 0; k < grades_.size(); ++k) {
    json row = json::array();
    for (std::size_t wi = 0; wi < words_.size(); ++wi) row.push_back(gamma(k, wi).to_double());
    j["gamma"].push_back(row);
  }
  return j.dump(2);
}

GradingTable GradingTable::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("GradingTable: bad JSON: ") + e.what());
  }
  if (!j.contains("m") || !j.contains("r")) throw SchemaError("GradingTable: missing m/r");
  GradingTable table(j.at("m").get<int>(), j.at("r").get<int>(), 1'000'000);
  if (j.contains("grades")) {
    std::vector<Rational> grades;
    for (const auto& g : j.at("grades")) grades.push_back(Rational::parse(g.get<std::string>()));
    if (grades != table.grades_) throw SchemaError("GradingTable: grades do not match (m, r)");
  }
  return table;
}

GradingTable build_grading(int m, int r, std::size_t word_cap) {
  return GradingTable(m, r, word_cap);
}

std::vector<double> dilate(const GradingTable& table, std::size_t grade_idx, double eta,
                           std::span<const double> v) {
  if (!(eta > 0.0)) throw ValidationError("dilate: eta must be positive");
  if (v.size() != table.word_count()) throw ValidationError("dilate: dimension mismatch");
  std::vector<double> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Rational g = table.gamma(grade_idx, j);
    out[j] = g == Rational(0) ? v[j] : std::pow(eta, g.to_double()) * v[j];
  }
  return out;
}

}  // namespace gld
