#include "hgg/table.hpp"

#include "hgg/error.hpp"

namespace hgg {

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  Table t(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i) + " has " +
                                                std::to_string(rows[i].size()) + " entries, expected " +
                                                std::to_string(c));
    for (int j = 0; j < c; ++j) t(i, j) = rows[i][j];
  }
  return t;
}

std::vector<std::vector<Elem>> Table::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

}  // namespace hgg
