#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "bcpoly/rational.hpp"

namespace bcpoly {

/// Weakly decreasing tuple of nonnegative integers. Trailing zeros are
/// stripped on construction, so (2,1,0) == (2,1). Parts are 0-based
/// internally; part(i) returns 0 past the length.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw Error("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw Error("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  int part(int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  std::vector<int> padded(int n) const {
    if (length() > n) throw Error("partition longer than requested padding");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
  }

  /// True when the (0-based) box (i, j) lies in the diagram.
  bool has_box(int i, int j) const { return i >= 0 && j >= 0 && j < part(i); }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(0)), 0);
  for (int row : lambda.parts())
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

inline int arm_length(const Partition& lambda, int i, int j) { return lambda.part(i) - j - 1; }

inline int leg_length(const Partition& lambda, const Partition& conj, int i, int j) {
  return conj.part(j) - i - 1;
}

struct FrobeniusCoordinates {
  std::vector<Rational> rows;
  std::vector<Rational> cols;
};

/// lambda_i - i + 1/2 and lambda'_i - i + 1/2 over the diagonal boxes.
inline FrobeniusCoordinates modified_frobenius(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  FrobeniusCoordinates out;
  for (int i = 0; lambda.part(i) > i; ++i) {
    out.rows.push_back(Rational(lambda.part(i) - i - 1) + Rational(1, 2));
    out.cols.push_back(Rational(conj.part(i) - i - 1) + Rational(1, 2));
  }
  return out;
}

inline bool contained_in(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

inline bool dominated_by(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  int sm = 0, sl = 0;
  int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) return false;
  }
  return true;
}

/// mu << lambda: lambda - mu is a nonnegative integer combination of
/// e_i - e_j (i < j) and e_i. That cone is exactly the set of integer
/// vectors whose prefix sums are all nonnegative.
inline bool ll_order(const Partition& mu, const Partition& lambda) {
  int len = std::max(mu.length(), lambda.length());
  int prefix = 0;
  for (int i = 0; i < len; ++i) {
    prefix += lambda.part(i) - mu.part(i);
    if (prefix < 0) return false;
  }
  return true;
}

enum class PartitionOrder { containment, ll, dominance };

inline bool partition_order(const Partition& mu, const Partition& lambda, PartitionOrder kind) {
  switch (kind) {
    case PartitionOrder::containment: return contained_in(mu, lambda);
    case PartitionOrder::ll: return ll_order(mu, lambda);
    case PartitionOrder::dominance: return dominated_by(mu, lambda);
  }
  return false;
}

/// nu is contained in mu and mu / nu has at most one box per column,
/// i.e. mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...
inline bool is_horizontal_strip(const Partition& mu, const Partition& nu) {
  if (nu.length() > mu.length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (nu.part(i) > mu.part(i) || nu.part(i) < mu.part(i + 1)) return false;
  return true;
}

/// nu interlaces mu when mu_1 >= nu_1 >= mu_2 >= ... with nu having at
/// most length(mu) parts counted in `slots` positions; slots bounds the
/// number of parts of nu (n-1 in the branching rules).
inline bool interlaces(const Partition& nu, const Partition& mu, int slots) {
  if (nu.length() > slots) return false;
  for (int i = 0; i < slots; ++i)
    if (nu.part(i) > mu.part(i) || nu.part(i) < mu.part(i + 1)) return false;
  return true;
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, int max_parts, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_parts, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// Partitions of k with at most max_parts parts, in decreasing lex order.
inline std::vector<Partition> partitions_of(int k, int max_parts = -1) {
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(k, k, max_parts < 0 ? k : max_parts, cur, out);
  return out;
}

/// All partitions with |nu| <= d and at most max_parts parts, grouped by size.
inline std::vector<Partition> partitions_up_to(int d, int max_parts = -1) {
  std::vector<Partition> out;
  for (int k = 0; k <= d; ++k) {
    auto level = partitions_of(k, max_parts);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// All mu contained in lambda.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(lambda.length()), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    int cap = i == 0 ? lambda.part(0) : std::min(lambda.part(i), cur[static_cast<std::size_t>(i - 1)]);
    for (int p = cap; p >= 0; --p) {
      cur[static_cast<std::size_t>(i)] = p;
      self(self, i + 1);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
  return out;
}

inline std::string to_string(const Partition& lambda) {
  std::string s = "(";
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda.part(i));
  }
  return s + ")";
}

/// Parses a comma-separated list such as "3,1". The empty string and "0"
/// give the empty partition.
inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw Error("malformed partition '" + text + "'");
    for (char c : token)
      if (c < '0' || c > '9') throw Error("malformed partition '" + text + "'");
    parts.push_back(std::stoi(token));
    token.clear();
  };
  if (text.empty()) return Partition();
  for (char c : text) {
    if (c == ',')
      flush();
    else if (c != ' ')
      token += c;
  }
  flush();
  return Partition(std::move(parts));
}

}  // namespace bcpoly
