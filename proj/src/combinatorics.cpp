#include "logchern/combinatorics.hpp"

#include <functional>

#include "logchern/errors.hpp"

namespace logchern {

std::vector<Partition> enumerate_partitions(int size, int max_parts) {
  if (size < 0) throw UsageError("enumerate_partitions: negative size");
  if (max_parts < 1) throw UsageError("enumerate_partitions: max_parts must be positive");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(size, size);
  return out;
}

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) throw UsageError("stirling2: negative argument");
  if (k > n) return 0;
  // row[j] holds S(i, j) for the current i
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

namespace {

void require_fits(const Partition& alpha, int r, const char* op) {
  if (r < 1) throw UsageError(std::string(op) + ": rank must be positive");
  if (alpha.length() > r) {
    throw UsageError(std::string(op) + ": partition " + alpha.to_string() + " has more than " + std::to_string(r) +
                     " parts");
  }
}

}  // namespace

Integer weyl_dim(const Partition& alpha, int r) {
  require_fits(alpha, r, "weyl_dim");
  Rational product = 1;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      product *= make_rational(alpha[static_cast<std::size_t>(i)] - alpha[static_cast<std::size_t>(j)] + j - i, j - i);
    }
  }
  if (!is_integer(product)) throw InternalError("Weyl product is not an integer: " + to_string(product));
  return product.get_num();
}

Integer ssyt_count(const Partition& alpha, int r) {
  require_fits(alpha, r, "ssyt_count");
  const auto parts = alpha.parts();
  // Cells in row-major order; rows weakly increase left to right, columns strictly increase downward.
  std::vector<std::vector<int>> tableau;
  for (int len : parts) tableau.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> column_length(tableau.empty() ? 0 : tableau.front().size(), 0);
  for (const auto& row : tableau) {
    for (std::size_t j = 0; j < row.size(); ++j) ++column_length[j];
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < tableau.size(); ++i) {
    for (std::size_t j = 0; j < tableau[i].size(); ++j) cells.emplace_back(i, j);
  }
  Integer count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[idx];
    int low = 1;
    if (j > 0) low = std::max(low, tableau[i][j - 1]);
    if (i > 0) low = std::max(low, tableau[i - 1][j] + 1);
    // leave room for the strictly increasing entries below in this column
    const int high = r - (column_length[j] - 1 - static_cast<int>(i));
    for (int v = low; v <= high; ++v) {
      tableau[i][j] = v;
      fill(idx + 1);
    }
    tableau[i][j] = 0;
  };
  fill(0);
  return count;
}

}  // namespace logchern
