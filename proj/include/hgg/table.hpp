#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hgg {

using Elem = int;

// Dense row-major rows x cols matrix of element indices.
class Table {
 public:
  Table() = default;
  Table(int rows, int cols, Elem fill = 0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Elem operator()(int r, int c) const { return data_[index(r, c)]; }
  Elem& operator()(int r, int c) { return data_[index(r, c)]; }

  std::span<const Elem> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<Elem>& data() const noexcept { return data_; }

  static Table from_rows(const std::vector<std::vector<Elem>>& rows);
  std::vector<std::vector<Elem>> to_rows() const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

}  // namespace hgg
