#pragma once

#include <optional>
#include <vector>

#include "bcpoly/partition.hpp"

namespace bcpoly {

/// Filling of a diagram with entries in {1..n}, strictly decreasing down
/// columns and weakly decreasing along rows. Box coordinates are 0-based.
class ReverseTableau {
public:
  ReverseTableau(Partition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length()) throw Error("tableau rows do not match shape");
    for (int i = 0; i < shape_.length(); ++i) {
      const auto& row = rows_[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) != shape_.part(i)) throw Error("tableau row length does not match shape");
      for (int j = 0; j < shape_.part(i); ++j) {
        int v = row[static_cast<std::size_t>(j)];
        if (v < 1) throw Error("tableau entries must be positive");
        if (j > 0 && v > row[static_cast<std::size_t>(j - 1)])
          throw Error("tableau rows must weakly decrease");
        if (i > 0 && v >= at(i - 1, j)) throw Error("tableau columns must strictly decrease");
      }
    }
  }

  const Partition& shape() const { return shape_; }
  int at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
      for (int v : r) m = std::max(m, v);
    return m;
  }

  /// Shape of the boxes holding entries >= k; always a partition.
  Partition shape_at_least(int k) const {
    std::vector<int> parts;
    for (const auto& r : rows_) {
      int c = 0;
      while (c < static_cast<int>(r.size()) && r[static_cast<std::size_t>(c)] >= k) ++c;
      parts.push_back(c);
    }
    return Partition(std::move(parts));
  }

  bool operator==(const ReverseTableau&) const = default;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Lazily enumerates the reverse tableaux of a shape with entries in
/// {1..n}. Emission order is decreasing lex order of the row reading word.
class ReverseTableauStream {
public:
  ReverseTableauStream(Partition shape, int n) : shape_(std::move(shape)), conj_(conjugate(shape_)), n_(n) {
    if (n < 1) throw Error("tableau alphabet size must be positive");
    exhausted_ = shape_.length() > n_;
    for (int i = 0; i < shape_.length(); ++i)
      for (int j = 0; j < shape_.part(i); ++j) boxes_.push_back({i, j});
    entries_.assign(boxes_.size(), 0);
  }

  std::optional<ReverseTableau> next() {
    if (exhausted_) return std::nullopt;
    if (!started_) {
      started_ = true;
      fill_from(0);
    } else {
      int k = static_cast<int>(boxes_.size()) - 1;
      while (k >= 0 && entries_[static_cast<std::size_t>(k)] <= lower_bound(k)) --k;
      if (k < 0) {
        exhausted_ = true;
        return std::nullopt;
      }
      --entries_[static_cast<std::size_t>(k)];
      fill_from(k + 1);
    }
    return current();
  }

private:
  struct Box {
    int i, j;
  };

  int lower_bound(int k) const {
    const Box& b = boxes_[static_cast<std::size_t>(k)];
    return conj_.part(b.j) - b.i;
  }

  int value_at(int i, int j) const {
    std::size_t idx = 0;
    for (int r = 0; r < i; ++r) idx += static_cast<std::size_t>(shape_.part(r));
    return entries_[idx + static_cast<std::size_t>(j)];
  }

  int upper_bound(int k) const {
    const Box& b = boxes_[static_cast<std::size_t>(k)];
    int hi = n_;
    if (b.j > 0) hi = std::min(hi, entries_[static_cast<std::size_t>(k - 1)]);
    if (b.i > 0) hi = std::min(hi, value_at(b.i - 1, b.j) - 1);
    return hi;
  }

  void fill_from(int k) {
    for (int m = k; m < static_cast<int>(boxes_.size()); ++m)
      entries_[static_cast<std::size_t>(m)] = upper_bound(m);
  }

  ReverseTableau current() const {
    std::vector<std::vector<int>> rows;
    std::size_t idx = 0;
    for (int i = 0; i < shape_.length(); ++i) {
      rows.emplace_back(entries_.begin() + static_cast<long>(idx),
                        entries_.begin() + static_cast<long>(idx + static_cast<std::size_t>(shape_.part(i))));
      idx += static_cast<std::size_t>(shape_.part(i));
    }
    return ReverseTableau(shape_, std::move(rows));
  }

  Partition shape_;
  Partition conj_;
  int n_;
  std::vector<Box> boxes_;
  std::vector<int> entries_;
  bool started_ = false;
  bool exhausted_ = false;
};

inline ReverseTableauStream enumerate_reverse_tableaux(const Partition& shape, int n) {
  return ReverseTableauStream(shape, n);
}

}  // namespace bcpoly
