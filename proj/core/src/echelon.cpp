#include "rootval/echelon.hpp"

#include "rootval/errors.hpp"

namespace rootval {

namespace {

template <typename F>
bool field_is_zero(const F& x);

template <>
bool field_is_zero<Rat>(const Rat& x) {
  return x == 0;
}

template <>
bool field_is_zero<Cyclotomic>(const Cyclotomic& x) {
  return x.is_zero();
}

template <typename F>
F field_div(const F& a, const F& b);

template <>
Rat field_div<Rat>(const Rat& a, const Rat& b) {
  return a / b;
}

template <>
Cyclotomic field_div<Cyclotomic>(const Cyclotomic& a, const Cyclotomic& b) {
  return a / b;
}

template <typename F>
std::set<long> pivots(const std::vector<std::map<long, F>>& vecs, long bound) {
  // rows keyed by their pivot order, each normalized to leading entry 1
  std::map<long, std::map<long, F>> rows;
  for (const auto& vec : vecs) {
    std::map<long, F> v;
    for (const auto& [o, c] : vec) {
      if (o >= 0 && o < bound && !field_is_zero(c)) v[o] = c;
    }
    while (!v.empty()) {
      long lead = v.begin()->first;
      auto it = rows.find(lead);
      if (it == rows.end()) {
        F inv_lead = v.begin()->second;
        for (auto& [o, c] : v) c = field_div(c, inv_lead);
        rows.emplace(lead, std::move(v));
        break;
      }
      // cancel the leading entry against the stored pivot row
      F factor = v.begin()->second;
      for (const auto& [o, c] : it->second) {
        auto jt = v.find(o);
        if (jt == v.end()) {
          v.emplace(o, -(c * factor));
        } else {
          jt->second = jt->second - c * factor;
          if (field_is_zero(jt->second)) v.erase(jt);
        }
      }
    }
  }
  std::set<long> out;
  for (const auto& [o, row] : rows) out.insert(o);
  return out;
}

}  // namespace

std::set<long> echelon_pivot_orders(const std::vector<std::map<long, Rat>>& vecs,
                                    long bound) {
  return pivots<Rat>(vecs, bound);
}

std::set<long> echelon_pivot_orders(
    const std::vector<std::map<long, Cyclotomic>>& vecs, long bound) {
  return pivots<Cyclotomic>(vecs, bound);
}

long rank_of(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[pivot_row], m[sel]);
    for (size_t i = pivot_row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[pivot_row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[pivot_row][j];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> right_kernel(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  // reduced row echelon form
  std::vector<long> pivot_col_of_row;
  size_t pr = 0;
  for (size_t col = 0; col < cols && pr < rows; ++col) {
    size_t sel = pr;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[pr], m[sel]);
    Rat lead = m[pr][col];
    for (size_t j = 0; j < cols; ++j) m[pr][j] /= lead;
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[pr][j];
    }
    pivot_col_of_row.push_back(static_cast<long>(col));
    ++pr;
  }
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free_col] = Rat(1);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      v[static_cast<size_t>(pivot_col_of_row[r])] = -m[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace rootval
