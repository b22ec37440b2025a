#include "rootval/rootval_datum.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rootval/errors.hpp"

namespace rootval {

namespace {

void validate(const RootValuationDatum& dat, bool internal) {
  auto bad = [&](const std::string& msg) {
    if (internal) fail_internal("root valuation datum: " + msg);
    fail_pre("DegenerateInput", "root valuation datum: " + msg);
  };
  long d = dat.d;
  if (d < 1 || static_cast<long>(dat.w.size()) != d ||
      static_cast<long>(dat.r.size()) != d) {
    bad("inconsistent sizes");
  }
  std::vector<bool> seen(d, false);
  for (long i = 0; i < d; ++i) {
    if (dat.w[i] < 0 || dat.w[i] >= d || seen[dat.w[i]]) bad("w is not a permutation");
    seen[dat.w[i]] = true;
    if (static_cast<long>(dat.r[i].size()) != d) bad("r is not square");
  }
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      if (i == j) continue;
      if (dat.r[i][j] != dat.r[j][i]) bad("r is not symmetric");
      if (dat.r[dat.w[i]][dat.w[j]] != dat.r[i][j]) bad("r is not w-equivariant");
      for (long k = 0; k < d; ++k) {
        if (k == i || k == j) continue;
        if (dat.r[i][k] < std::min(dat.r[i][j], dat.r[j][k])) {
          bad("ultrametric inequality fails");
        }
      }
    }
  }
}

// Flattened lower triangle of r after relabeling by origin (new -> original).
std::vector<Rat> encode(const RootValuationDatum& dat,
                        const std::vector<long>& origin) {
  std::vector<Rat> out;
  for (size_t i = 0; i < origin.size(); ++i) {
    for (size_t j = 0; j < i; ++j) out.push_back(dat.r[origin[i]][origin[j]]);
  }
  return out;
}

// Lex-least encoding over all relabelings that put the cycles of w into the
// canonical slot layout (cycles grouped by ascending length).
std::vector<Rat> canonical_encoding(const RootValuationDatum& dat) {
  std::vector<std::vector<long>> cycles = cycles_of(dat.w);
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });

  const long leaf_cap = 200000;
  long leaves = 0;
  std::vector<Rat> best;
  bool have_best = false;
  std::vector<long> origin;
  std::vector<bool> used(cycles.size(), false);

  std::function<void(size_t)> rec = [&](size_t slot) {
    if (slot == cycles.size()) {
      if (++leaves > leaf_cap) {
        fail_pre("CapExceeded", "canonicalization search exceeded its budget");
      }
      std::vector<Rat> enc = encode(dat, origin);
      if (!have_best || enc < best) {
        best = std::move(enc);
        have_best = true;
      }
      return;
    }
    size_t len = cycles[slot].size();
    for (size_t c = 0; c < cycles.size(); ++c) {
      if (used[c] || cycles[c].size() != len) continue;
      used[c] = true;
      for (size_t rot = 0; rot < len; ++rot) {
        // cycles_of lists each cycle in w-orbit order, so consecutive new
        // indices stay consecutive under the relabeled permutation
        for (size_t i = 0; i < len; ++i) {
          origin.push_back(cycles[c][(rot + i) % len]);
        }
        rec(slot + 1);
        origin.resize(origin.size() - len);
      }
      used[c] = false;
    }
  };
  rec(0);
  return best;
}

}  // namespace

RootValuationDatum make_root_valuation_datum(std::vector<long> w,
                                             std::vector<std::vector<Rat>> r) {
  RootValuationDatum dat;
  dat.d = static_cast<long>(w.size());
  dat.w = std::move(w);
  dat.r = std::move(r);
  validate(dat, false);
  return dat;
}

RootValuationDatum root_valuation_datum(const std::vector<Branch>& branches) {
  if (branches.empty()) fail_pre("DegenerateInput", "no branches given");
  long L = 1;
  for (const auto& b : branches) {
    if (b.vertical) {
      fail_pre("DegenerateInput", "vertical branch has no eigenvalue expansions");
    }
    L = ilcm(L, b.d);
  }
  RootValuationDatum dat;
  std::vector<long> offset;
  for (const auto& b : branches) {
    offset.push_back(dat.d);
    dat.d += b.d;
  }
  dat.w.assign(dat.d, 0);
  dat.r.assign(dat.d, std::vector<Rat>(dat.d, Rat(0)));
  std::vector<std::vector<PuiseuxSeries>> emb;
  for (const auto& b : branches) emb.push_back(eigen_embeddings(b, L));

  for (size_t bi = 0; bi < branches.size(); ++bi) {
    long d_i = branches[bi].d;
    for (long j = 0; j < d_i; ++j) {
      dat.w[offset[bi] + j] = offset[bi] + (j + 1) % d_i;
      for (long l = j + 1; l < d_i; ++l) {
        Rat v = conjugate_difference_valuation(branches[bi], l - j);
        dat.r[offset[bi] + j][offset[bi] + l] = v;
        dat.r[offset[bi] + l][offset[bi] + j] = v;
      }
    }
    for (size_t bk = bi + 1; bk < branches.size(); ++bk) {
      for (long j = 0; j < d_i; ++j) {
        for (long l = 0; l < branches[bk].d; ++l) {
          Valuation v = difference_valuation(emb[bi][j], emb[bk][l]);
          if (v.kind == Valuation::Infinite) {
            fail_pre("NotDistinct", "two branches share a conjugate expansion");
          }
          if (v.kind == Valuation::Indeterminate) {
            fail_precision("a cross-branch difference valuation is unknown at "
                           "this truncation");
          }
          dat.r[offset[bi] + j][offset[bk] + l] = v.value;
          dat.r[offset[bk] + l][offset[bi] + j] = v.value;
        }
      }
    }
  }
  validate(dat, true);
  return dat;
}

std::vector<std::vector<long>> cycles_of(const std::vector<long>& w) {
  long d = static_cast<long>(w.size());
  std::vector<bool> seen(d, false);
  std::vector<std::vector<long>> out;
  for (long s = 0; s < d; ++s) {
    if (seen[s]) continue;
    std::vector<long> cyc;
    long i = s;
    while (!seen[i]) {
      seen[i] = true;
      cyc.push_back(i);
      i = w[i];
      if (i < 0 || i >= d) fail_pre("DegenerateInput", "w is not a permutation");
    }
    out.push_back(std::move(cyc));
  }
  // each cycle already starts at its least element (s is the least unseen)
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

bool equal_root_valuation(const RootValuationDatum& a,
                          const RootValuationDatum& b) {
  validate(a, false);
  validate(b, false);
  if (a.d != b.d) fail_pre("SizeMismatch", "data have different sizes");
  if (a.d > 10) fail_pre("CapExceeded", "equality decision capped at d <= 10");
  auto type = [](const RootValuationDatum& dat) {
    std::map<size_t, long> t;
    for (const auto& c : cycles_of(dat.w)) ++t[c.size()];
    return t;
  };
  if (type(a) != type(b)) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace rootval
