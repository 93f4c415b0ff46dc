#include "ocsym/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ocsym/parallel.hpp"

namespace ocsym {
namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

const Rational* find_entry(const RatMatrix::Row& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const RatMatrix::Entry& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// row -= factor * pivot
void axpy(RatMatrix::Row& row, const Rational& factor, const RatMatrix::Row& pivot) {
  RatMatrix::Row out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

}  // namespace

RatMatrix RatMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  RatMatrix m(0, dense.empty() ? 0 : dense.front().size());
  for (const auto& r : dense) {
    if (r.size() != m.cols_) throw std::invalid_argument("ragged dense matrix");
    std::vector<Entry> entries;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] != 0) entries.emplace_back(c, r[c]).second.canonicalize();
    }
    m.rows_.push_back(std::move(entries));
  }
  return m;
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational RatMatrix::at(std::size_t r, std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column out of range");
  const Rational* v = find_entry(rows_.at(r), c);
  return v ? *v : Rational(0);
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (c >= cols_) throw std::out_of_range("column out of range");
  Row& row = rows_.at(r);
  Rational v = value;
  v.canonicalize();
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (value == 0) {
      row.erase(it);
    } else {
      it->second = v;
    }
  } else if (value != 0) {
    row.insert(it, Entry{c, v});
  }
}

void RatMatrix::append_row(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Row row;
  for (auto& e : entries) {
    if (e.first >= cols_) throw std::out_of_range("column out of range");
    e.second.canonicalize();
    if (!row.empty() && row.back().first == e.first) {
      row.back().second += e.second;
    } else {
      row.push_back(std::move(e));
    }
  }
  std::erase_if(row, [](const Entry& e) { return e.second == 0; });
  rows_.push_back(std::move(row));
}

std::vector<std::vector<Rational>> RatMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_.size(), std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) out[r][c] = v;
  }
  return out;
}

std::vector<Rational> RatMatrix::multiply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<Rational> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, x] : rows_[r]) out[r] += x * v[c];
  }
  return out;
}

RrefResult rref(const RatMatrix& a) {
  std::vector<RatMatrix::Row> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (!a.row(r).empty()) rows.push_back(a.row(r));
  }

  std::vector<std::size_t> pivots;
  std::size_t done = 0;  // rows [0, done) hold pivots
  while (done < rows.size()) {
    // Leftmost column with a nonzero among the remaining rows.
    std::size_t col = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = done; r < rows.size(); ++r) {
      if (!rows[r].empty()) col = std::min(col, rows[r].front().first);
    }
    if (col == std::numeric_limits<std::size_t>::max()) break;

    std::size_t best = rows.size();
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = done; r < rows.size(); ++r) {
      if (rows[r].empty() || rows[r].front().first != col) continue;
      std::size_t size = bit_size(rows[r].front().second);
      if (size < best_size) {
        best = r;
        best_size = size;
      }
    }
    std::swap(rows[done], rows[best]);
    RatMatrix::Row& pivot = rows[done];
    Rational inv = 1 / pivot.front().second;
    for (auto& [c, v] : pivot) v *= inv;

    const RatMatrix::Row& p = rows[done];
    parallel_for(rows.size(), [&](std::size_t r) {
      if (r == done) return;
      const Rational* v = find_entry(rows[r], col);
      if (v == nullptr) return;
      Rational factor = *v;
      axpy(rows[r], factor, p);
    }, 4096);
    pivots.push_back(col);
    ++done;
  }

  RatMatrix out(0, a.cols());
  for (std::size_t r = 0; r < done; ++r) out.append_row(std::move(rows[r]));
  for (std::size_t r = done; r < a.rows(); ++r) out.append_row({});
  return {std::move(out), std::move(pivots)};
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& a) {
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }

}  // namespace ocsym
