#pragma once

// Straight-line reference implementations. They deliberately share no code
// with the library and work on plain containers.

#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// H = sum over expected support of -(1-p) ln p, plus sum over unexpected
// support of -p ln p. With clamp, expected languages absent from the support
// count as p = 1e-10.
inline double entropy(const std::map<std::string, double>& p, const std::set<std::string>& expected, bool clamp) {
  double h = 0.0;
  for (const auto& [lang, prob] : p) {
    if (prob <= 0.0) continue;
    if (expected.count(lang)) {
      h += -(1.0 - prob) * std::log(prob);
    } else {
      h += -prob * std::log(prob);
    }
  }
  if (clamp) {
    for (const auto& lang : expected) {
      auto it = p.find(lang);
      if (it == p.end() || it->second <= 0.0) h += -(1.0 - 1e-10) * std::log(1e-10);
    }
  }
  return h;
}

// One column pair, following the published steps literally.
inline double kl_column(std::vector<double> p, std::vector<double> q) {
  std::vector<double> P, Q;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0.0) {
      P.push_back(p[i]);
      Q.push_back(q[i]);
    }
  }
  double sp = 0.0, sq = 0.0;
  for (double x : P) sp += x;
  for (double x : Q) sq += x;
  for (auto& x : P) x = x / sp;
  if (sq != 0.0) {
    for (auto& x : Q) x = x / sq;
  }
  double kl = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    double a = P[i] + 1e-10;
    double b = Q[i] + 1e-10;
    kl += a * std::log(a / b);
  }
  return kl;
}

// m[row][col]; columns whose m1 entries are all zero are skipped.
inline double kl_matrix(const std::vector<std::vector<double>>& m1, const std::vector<std::vector<double>>& m2,
                        std::size_t* used = nullptr) {
  std::size_t rows = m1.size(), cols = rows ? m1[0].size() : 0;
  double total = 0.0;
  std::size_t n = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<double> p(rows), q(rows);
    bool any = false;
    for (std::size_t i = 0; i < rows; ++i) {
      p[i] = m1[i][j];
      q[i] = m2[i][j];
      if (p[i] != 0.0) any = true;
    }
    if (!any) continue;
    total += kl_column(p, q);
    ++n;
  }
  if (used) *used = n;
  return n ? total / static_cast<double>(n) : 0.0;
}

// Rank by counting: 1 + (values strictly below) + (ties - 1) / 2.
inline std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double below = 0.0, equal = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) below += 1.0;
      if (v[j] == v[i]) equal += 1.0;
    }
    r[i] = 1.0 + below + (equal - 1.0) / 2.0;
  }
  return r;
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double num = 0.0, da = 0.0, db = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - ma) * (b[i] - mb);
    da += (a[i] - ma) * (a[i] - ma);
    db += (b[i] - mb) * (b[i] - mb);
  }
  return num / std::sqrt(da * db);
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(ranks(x), ranks(y));
}

}  // namespace oracle
