#include "nervekit/nerves.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>

namespace nervekit {

namespace {

std::uint32_t interval_mask(int lo, int hi) {
  return static_cast<std::uint32_t>(((1ull << (hi + 1)) - 1) & ~((1ull << lo) - 1));
}

// Removes repeated entries; seq maps each position to its entry in `strict`.
void deduplicate(const std::vector<std::uint32_t>& chain, std::vector<std::uint32_t>& strict, Sequence& seq) {
  strict.clear();
  seq.clear();
  for (std::uint32_t s : chain) {
    if (strict.empty() || strict.back() != s) strict.push_back(s);
    seq.push_back(static_cast<int>(strict.size()) - 1);
  }
}

std::uint32_t map_mask(std::uint32_t s, const Sequence& f) { return image_mask(s, f); }

}  // namespace

// Binerve ---------------------------------------------------------------------

CellChain Binerve::chain(int p, int q, CellId c) const {
  const auto& key = rows[q].keys[p][c];
  CellChain out;
  out.level = q;
  out.objects.push_back(key[0]);
  for (int t = 1; t <= p; ++t) {
    out.objects.push_back(key[2 * t - 1]);
    out.morphisms.push_back(key[2 * t]);
  }
  return out;
}

CellId Binerve::find(int q, const CellChain& chain) const {
  std::vector<CellId> key{chain.objects[0]};
  for (std::size_t t = 0; t < chain.morphisms.size(); ++t) {
    key.push_back(chain.objects[t + 1]);
    key.push_back(chain.morphisms[t]);
  }
  return rows[q].find(key);
}

Binerve binerve_marked(const RelativeSimplicialCategory& r, int P, int Q) {
  const SimplicialCategory& c = r.cat;
  if (Q > c.dim) throw TruncationError("binerve: row " + std::to_string(Q) + " above hom truncation");
  Binerve b;
  for (int q = 0; q <= Q; ++q) b.rows.push_back(nerve_cat(level_category(c, q), P));
  std::vector<std::vector<std::size_t>> sizes(P + 1, std::vector<std::size_t>(Q + 1));
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) sizes[p][q] = b.rows[q].space.size(p);
  BisimplicialSet x = BisimplicialSet::with_sizes(sizes);
  for (int q = 0; q <= Q; ++q) {
    const SSet& row_q = b.rows[q].space;
    for (int p = 0; p <= P; ++p) {
      if (p > 0) x.hface[p][q] = row_q.face_tables()[p];
      if (p < P) x.hdegen[p][q] = row_q.degen_tables()[p];
    }
  }
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q)
      for (CellId cell = 0; cell < sizes[p][q]; ++cell) {
        const CellChain ch = b.chain(p, q, cell);
        for (int side = 0; side < 2; ++side) {
          const bool face = side == 0;
          if (face ? q == 0 : q == Q) continue;
          auto& tables = face ? x.vface[p][q] : x.vdegen[p][q];
          for (int i = 0; i <= q; ++i) {
            CellChain out = ch;
            out.level = face ? q - 1 : q + 1;
            for (int t = 0; t < p; ++t) {
              const SSet& h = c.hom(ch.objects[t], ch.objects[t + 1]);
              out.morphisms[t] = face ? h.face(q, i, ch.morphisms[t]) : h.degen(q, i, ch.morphisms[t]);
            }
            tables[i][cell] = b.find(out.level, out);
          }
        }
      }
  b.marked.space = std::move(x);
  if (P >= 1) {
    b.marked.marked.resize(Q + 1);
    for (int q = 0; q <= Q; ++q) {
      b.marked.marked[q].resize(sizes[1][q]);
      for (CellId cell = 0; cell < sizes[1][q]; ++cell) {
        const CellChain ch = b.chain(1, q, cell);
        b.marked.marked[q][cell] = r.in_sub(ch.objects[0], ch.objects[1], q, ch.morphisms[0]) ? 1 : 0;
      }
    }
  }
  return b;
}

SSet classifying_space(const SimplicialCategory& c, int L) {
  return diagonal(binerve_marked(whole(c), L, L).marked.space);
}

// Shapes ----------------------------------------------------------------------

int HcShape::find(const std::vector<std::uint32_t>& strict_chain) const {
  auto it = index.find(strict_chain);
  if (it == index.end()) throw std::logic_error("HcShape: chain is not a slot");
  return it->second;
}

namespace {

std::unique_ptr<HcShape> make_shape(int n) {
  auto sh = std::make_unique<HcShape>();
  sh->n = n;
  for (int gap = 1; gap <= n; ++gap)
    for (int a = 0; a + gap <= n; ++a) {
      const int b = a + gap;
      const std::uint32_t full = interval_mask(a, b);
      std::vector<std::vector<std::uint32_t>> chains;
      std::vector<std::uint32_t> cur{(1u << a) | (1u << b)};
      auto grow = [&](auto&& self) -> void {
        chains.push_back(cur);
        const std::uint32_t last = cur.back();
        const std::uint32_t free = full & ~last;
        // Proper supersets of `last` inside [a, b].
        for (std::uint32_t add = free; add != 0; add = (add - 1) & free) {
          cur.push_back(last | add);
          self(self);
          cur.pop_back();
        }
      };
      grow(grow);
      std::sort(chains.begin(), chains.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
      });
      for (auto& ch : chains) {
        HcShape::Slot slot{a, b, static_cast<int>(ch.size()) - 1, std::move(ch), {}};
        sh->index.emplace(slot.chain, static_cast<int>(sh->slots.size()));
        sh->slots.push_back(std::move(slot));
      }
    }
  for (auto& slot : sh->slots) {
    slot.faces.assign(slot.level + 1, -1);
    for (int i = 1; i <= slot.level; ++i) {
      auto ch = slot.chain;
      ch.erase(ch.begin() + i);
      slot.faces[i] = sh->index.at(ch);
    }
  }
  return sh;
}

std::recursive_mutex shape_mutex;
std::map<int, std::unique_ptr<HcShape>> shape_cache;

}  // namespace

const HcShape& hc_shape(int n) {
  std::lock_guard<std::recursive_mutex> lock(shape_mutex);
  auto it = shape_cache.find(n);
  if (it != shape_cache.end()) return *it->second;
  auto sh = make_shape(n);
  if (n >= 1) {
    const HcShape& lower = hc_shape(n - 1);
    sh->face_gather.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      Sequence delta;
      for (int t = 0; t < n; ++t) delta.push_back(t < i ? t : t + 1);
      for (const auto& slot : lower.slots) {
        std::vector<std::uint32_t> img;
        for (std::uint32_t s : slot.chain) img.push_back(map_mask(s, delta));
        sh->face_gather[i].push_back(sh->find(img));
      }
    }
  }
  auto* raw = sh.get();
  shape_cache.emplace(n, std::move(sh));
  // Degeneracies read from shape n and write shape n+1; built after insertion
  // so the recursive lookup of n+1 sees this shape.
  const auto upper_ptr = make_shape(n + 1);
  const HcShape& upper = *upper_ptr;
  raw->degen_gather.resize(n + 1);
  std::vector<std::uint32_t> strict;
  Sequence seq;
  for (int i = 0; i <= n; ++i) {
    Sequence sigma;
    for (int t = 0; t <= n + 1; ++t) sigma.push_back(t <= i ? t : t - 1);
    for (const auto& slot : upper.slots) {
      if (sigma[slot.a] == sigma[slot.b]) {
        raw->degen_gather[i].push_back({-1, {}});
        continue;
      }
      std::vector<std::uint32_t> img;
      for (std::uint32_t s : slot.chain) img.push_back(map_mask(s, sigma));
      deduplicate(img, strict, seq);
      raw->degen_gather[i].push_back({raw->find(strict), seq});
    }
  }
  return *raw;
}

// HC simplices ------------------------------------------------------------------

namespace {

CellId eval_chain(const SimplicialCategory& c, int n, const HcKey& key, int a, int b,
                  std::span<const std::uint32_t> chain) {
  const int level = static_cast<int>(chain.size()) - 1;
  const ObjId xa = key[a], xb = key[b];
  if (a == b) return c.identity(xa, level);
  const std::uint32_t ends = (1u << a) | (1u << b);
  if (chain[0] == ends) {
    thread_local std::vector<std::uint32_t> strict;
    thread_local Sequence seq;
    strict.clear();
    seq.clear();
    for (std::uint32_t s : chain) {
      if (strict.empty() || strict.back() != s) strict.push_back(s);
      seq.push_back(static_cast<int>(strict.size()) - 1);
    }
    const CellId v = key[n + 1 + hc_shape(n).find(strict)];
    if (strict.size() == chain.size()) return v;
    return c.hom(xa, xb).apply(static_cast<int>(strict.size()) - 1, v, seq);
  }
  int k = a + 1;
  while (!(chain[0] & (1u << k))) ++k;
  const std::uint32_t left = interval_mask(a, k), right = interval_mask(k, b);
  std::vector<std::uint32_t> lc(chain.size()), rc(chain.size());
  for (std::size_t t = 0; t < chain.size(); ++t) {
    lc[t] = chain[t] & left;
    rc[t] = chain[t] & right;
  }
  return c.compose(xa, key[k], xb, level, eval_chain(c, n, key, k, b, rc), eval_chain(c, n, key, a, k, lc));
}

}  // namespace

CellId hc_eval(const SimplicialCategory& c, int n, const HcKey& key, int a, int b,
               const std::vector<std::uint32_t>& chain) {
  return eval_chain(c, n, key, a, b, chain);
}

ValidationReport validate_hc_simplex(const SimplicialCategory& c, int n, const HcKey& key) {
  ValidationReport r;
  const HcShape& sh = hc_shape(n);
  if (key.size() != static_cast<std::size_t>(n) + 1 + sh.slots.size()) {
    r.add("hc/shape", "simplex of level " + std::to_string(n) + " has " + std::to_string(key.size()) + " entries");
    return r;
  }
  for (int t = 0; t <= n; ++t)
    if (key[t] >= c.objects()) {
      r.add("hc/range", "object " + std::to_string(t));
      return r;
    }
  for (std::size_t s = 0; s < sh.slots.size(); ++s) {
    const auto& slot = sh.slots[s];
    if (slot.level > c.dim) {
      r.add("hc/truncation", "slot needs hom level " + std::to_string(slot.level));
      return r;
    }
    if (key[n + 1 + s] >= c.hom(key[slot.a], key[slot.b]).size(slot.level)) {
      r.add("hc/range", "slot " + std::to_string(s));
      return r;
    }
  }
  for (std::size_t s = 0; s < sh.slots.size(); ++s) {
    const auto& slot = sh.slots[s];
    const SSet& h = c.hom(key[slot.a], key[slot.b]);
    const CellId v = key[n + 1 + s];
    for (int i = 0; i <= slot.level && slot.level > 0; ++i) {
      CellId expect;
      if (i == 0) {
        expect = eval_chain(c, n, key, slot.a, slot.b, std::span(slot.chain).subspan(1));
      } else {
        expect = key[n + 1 + slot.faces[i]];
      }
      if (h.face(slot.level, i, v) != expect) {
        std::string chain;
        for (std::uint32_t m : slot.chain) chain += (chain.empty() ? "" : "<") + mask_string(m);
        r.add("hc/face", "d_" + std::to_string(i) + " of slot " + chain);
      }
    }
  }
  return r;
}

HcKey hc_face(int n, int i, const HcKey& key) {
  const HcShape& sh = hc_shape(n);
  HcKey out;
  out.reserve(key.size());
  for (int t = 0; t <= n; ++t)
    if (t != i) out.push_back(key[t]);
  for (int src : sh.face_gather[i]) out.push_back(key[n + 1 + src]);
  return out;
}

HcKey hc_degen(const SimplicialCategory& c, int n, int i, const HcKey& key) {
  const HcShape& sh = hc_shape(n);
  const HcShape& up = hc_shape(n + 1);
  HcKey out(key.begin(), key.begin() + i + 1);
  out.insert(out.end(), key.begin() + i, key.begin() + n + 1);
  const auto& gather = sh.degen_gather[i];
  for (std::size_t t = 0; t < gather.size(); ++t) {
    const auto& slot = up.slots[t];
    const auto& e = gather[t];
    if (e.slot < 0) {
      out.push_back(c.identity(out[slot.a], slot.level));
      continue;
    }
    const auto& src = sh.slots[e.slot];
    const CellId v = key[n + 1 + e.slot];
    out.push_back(src.level == slot.level ? v
                                          : c.hom(key[src.a], key[src.b]).apply(src.level, v, e.seq));
  }
  return out;
}

HcKey hc_apply(const SimplicialCategory& c, int n, const HcKey& key, const Sequence& seq) {
  const int m = static_cast<int>(seq.size()) - 1;
  std::vector<ObjId> objects;
  for (int t = 0; t <= m; ++t) objects.push_back(key[seq[t]]);
  return hc_from_slots(m, objects, [&](const HcShape::Slot& slot) {
    std::vector<std::uint32_t> img;
    for (std::uint32_t s : slot.chain) img.push_back(map_mask(s, seq));
    return hc_eval(c, n, key, seq[slot.a], seq[slot.b], img);
  });
}

HcKey hc_from_slots(int n, const std::vector<ObjId>& objects,
                    const std::function<CellId(const HcShape::Slot&)>& value) {
  const HcShape& sh = hc_shape(n);
  HcKey key(objects.begin(), objects.end());
  for (const auto& slot : sh.slots) key.push_back(value(slot));
  return key;
}

CellId HcNerve::find(int n, const HcKey& key) const {
  auto it = index.at(n).find(key);
  if (it == index[n].end()) throw std::out_of_range("HcNerve: not a simplex at level " + std::to_string(n));
  return it->second;
}

namespace {

// All simplices of level n over one object tuple, in slot-lexicographic order.
void enumerate_hc(const SimplicialCategory& c, const std::vector<FaceIndex>& fidx, int n,
                  const std::vector<ObjId>& objects, std::vector<HcKey>& out) {
  const HcShape& sh = hc_shape(n);
  HcKey key(objects.begin(), objects.end());
  key.resize(n + 1 + sh.slots.size());
  std::vector<CellId> faces;
  const std::size_t N = c.objects();
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == sh.slots.size()) {
      out.push_back(key);
      return;
    }
    const auto& slot = sh.slots[s];
    const ObjId xa = key[slot.a], xb = key[slot.b];
    const FaceIndex& fi = fidx[xa * N + xb];
    faces.clear();
    if (slot.level > 0) {
      std::vector<std::uint32_t> rest(slot.chain.begin() + 1, slot.chain.end());
      faces.push_back(hc_eval(c, n, key, slot.a, slot.b, rest));
      for (int i = 1; i <= slot.level; ++i) faces.push_back(key[n + 1 + slot.faces[i]]);
    }
    const std::vector<CellId>& cands = fi.candidates(slot.level, faces);
    for (CellId v : cands) {
      key[n + 1 + s] = v;
      self(self, s + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

HcNerve hc_nerve(const SimplicialCategory& c, int L, int jobs) {
  if (L > c.dim + 1)
    throw TruncationError("hc_nerve: level " + std::to_string(L) + " needs hom truncation " + std::to_string(L - 1) +
                          ", have " + std::to_string(c.dim));
  const std::size_t N = c.objects();
  std::vector<FaceIndex> fidx;
  fidx.reserve(c.homs.size());
  for (const SSet& h : c.homs) fidx.emplace_back(h);
  KeyedCells<HcKey> cells;
  cells.keys.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    hc_shape(n + 1);  // warm the cache for degeneracies
    std::vector<std::vector<ObjId>> tuples;
    std::vector<ObjId> objs(n + 1, 0);
    auto rec = [&](auto&& self, int t) -> void {
      if (t > n) {
        tuples.push_back(objs);
        return;
      }
      for (ObjId x = 0; x < N; ++x) {
        objs[t] = x;
        self(self, t + 1);
      }
    };
    if (N > 0) rec(rec, 0);
    std::vector<std::vector<HcKey>> parts(tuples.size());
    if (jobs > 1 && tuples.size() > 1) {
      std::vector<std::future<void>> fut;
      std::size_t next = 0;
      std::mutex m;
      for (int w = 0; w < jobs; ++w)
        fut.push_back(std::async(std::launch::async, [&] {
          for (;;) {
            std::size_t t;
            {
              std::lock_guard<std::mutex> lock(m);
              if (next >= tuples.size()) return;
              t = next++;
            }
            enumerate_hc(c, fidx, n, tuples[t], parts[t]);
          }
        }));
      for (auto& f : fut) f.get();
    } else {
      for (std::size_t t = 0; t < tuples.size(); ++t) enumerate_hc(c, fidx, n, tuples[t], parts[t]);
    }
    for (auto& p : parts)
      for (auto& k : p) cells.keys[n].push_back(std::move(k));
  }
  HcNerve out;
  out.space = build_keyed(
      cells, [](int n, int i, const HcKey& k) { return hc_face(n, i, k); },
      [&c](int n, int i, const HcKey& k) { return hc_degen(c, n, i, k); });
  out.keys = std::move(cells.keys);
  out.index = std::move(cells.index);
  return out;
}

// Comparison --------------------------------------------------------------------

CellId sigma_prime(const SimplicialCategory& c, const CellChain& chain, int i, int j,
                   const std::vector<Sequence>& seqs, int level) {
  if (i == j) return c.identity(chain.objects[i], level);
  auto factor = [&](int p) {
    const SSet& h = c.hom(chain.objects[p - 1], chain.objects[p]);
    return h.apply(chain.level, chain.morphisms[p - 1], seqs[j - p]);
  };
  CellId acc = factor(i + 1);
  for (int p = i + 2; p <= j; ++p)
    acc = c.compose(chain.objects[i], chain.objects[p - 1], chain.objects[p], level, factor(p), acc);
  return acc;
}

HcKey comparison_simplex(const SimplicialCategory& c, const CellChain& chain) {
  const int k = static_cast<int>(chain.morphisms.size());
  return hc_from_slots(k, chain.objects, [&](const HcShape::Slot& slot) {
    std::vector<Sequence> seqs(static_cast<std::size_t>(slot.b - slot.a));
    for (std::uint32_t s : slot.chain) {
      const auto v = comparison_vertex(s, slot.a, slot.b);
      for (std::size_t f = 0; f < v.size(); ++f) seqs[f].push_back(v[f]);
    }
    return sigma_prime(c, chain, slot.a, slot.b, seqs, slot.level);
  });
}

Comparison comparison_map(const SimplicialCategory& c, int L, int jobs) {
  Comparison out{SSet(0), HcNerve{SSet(0), {}, {}}, {}, binerve_marked(whole(c), L, L)};
  out.b = diagonal(out.binerve.marked.space);
  out.hc = hc_nerve(c, L, jobs);
  for (int k = 0; k <= L; ++k) {
    out.map.levels.emplace_back(out.b.size(k));
    for (CellId cell = 0; cell < out.b.size(k); ++cell)
      out.map.levels[k][cell] = out.hc.find(k, comparison_simplex(c, out.binerve.chain(k, k, cell)));
  }
  return out;
}

HcKey vertex_chain_simplex(const SimplicialCategory& c, const CellChain& vertices) {
  const int n = static_cast<int>(vertices.morphisms.size());
  return hc_from_slots(n, vertices.objects, [&](const HcShape::Slot& slot) {
    const auto& x = vertices.objects;
    CellId acc = vertices.morphisms[slot.a];
    for (int p = slot.a + 2; p <= slot.b; ++p)
      acc = c.compose(x[slot.a], x[p - 1], x[p], 0, vertices.morphisms[p - 1], acc);
    return c.hom(x[slot.a], x[slot.b]).degenerate_up(0, acc, slot.level);
  });
}

// chi and theta -------------------------------------------------------------------

std::vector<Sequence> ChiComposite::hom(int a, int b, const std::vector<std::uint32_t>& chain) const {
  std::vector<Sequence> out;
  for (int pp = tau1[b]; pp > tau1[a]; --pp) {
    Sequence seq;
    for (std::uint32_t s : chain) {
      int best = -1;
      for (int t = 0; t <= r; ++t)
        if ((s & (1u << t)) && tau1[t] < pp) best = std::max(best, tau2[t]);
      seq.push_back(best);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

ChiComposite chi_simplex(int p, int q, const Sequence& tau1, const Sequence& tau2) {
  if (tau1.size() != tau2.size() || tau1.empty()) throw std::invalid_argument("chi_simplex: components differ in length");
  if (!is_monotone(tau1) || !is_monotone(tau2))
    throw std::invalid_argument("chi_simplex: " + sequence_string(tau1) + "x" + sequence_string(tau2) +
                                " is not weakly increasing");
  for (std::size_t t = 0; t < tau1.size(); ++t)
    if (tau1[t] < 0 || tau1[t] > p || tau2[t] < 0 || tau2[t] > q)
      throw std::invalid_argument("chi_simplex: value out of range");
  return ChiComposite{p, q, static_cast<int>(tau1.size()) - 1, tau1, tau2};
}

SimplicialFunctor chi_functor(const ChiComposite& chi, const FrakC& src) {
  SimplicialFunctor f;
  const int N = chi.r + 1;
  for (int t = 0; t < N; ++t) f.objects.push_back(static_cast<ObjId>(chi.tau1[t]));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      SimplicialMap map;
      for (int k = 0; k <= src.cat.dim; ++k) {
        map.levels.emplace_back(src.cat.hom(a, b).size(k));
        for (CellId cell = 0; cell < map.levels[k].size(); ++cell)
          map.levels[k][cell] = bfrak_cell(chi.q, k, chi.hom(a, b, src.chain(a, b, k, cell)));
      }
      f.homs.push_back(std::move(map));
    }
  return f;
}

HcKey theta_simplex(const SimplicialCategory& c, const CellChain& x, const Sequence& tau1, const Sequence& tau2) {
  const int p = static_cast<int>(x.morphisms.size());
  const ChiComposite chi = chi_simplex(p, x.level, tau1, tau2);
  const HcShape& sh = hc_shape(chi.r);
  HcKey key;
  key.reserve(chi.r + 1 + sh.slots.size());
  for (int t : tau1) key.push_back(x.objects[t]);
  // best[f][mask]: largest tau2 over the bits t of mask with tau1[t] < f.
  const std::size_t masks = std::size_t{1} << (chi.r + 1);
  std::vector<int> best(static_cast<std::size_t>(p + 1) * masks, -1);
  for (int f = 1; f <= p; ++f)
    for (std::size_t m = 1; m < masks; ++m) {
      const int t = std::countr_zero(m);
      const int own = tau1[t] < f ? tau2[t] : -1;
      best[f * masks + m] = std::max(own, best[f * masks + (m & (m - 1))]);
    }
  // Factor values keyed by (f, packed sequence); same values as sigma_prime over chi.hom.
  std::unordered_map<std::uint64_t, CellId> factors;
  Sequence seq;
  for (const auto& slot : sh.slots) {
    const int i = tau1[slot.a], j = tau1[slot.b];
    if (i == j) {
      key.push_back(c.identity(x.objects[i], slot.level));
      continue;
    }
    CellId acc = 0;
    for (int f = i + 1; f <= j; ++f) {
      seq.clear();
      std::uint64_t packed = static_cast<std::uint64_t>(f);
      for (std::uint32_t s : slot.chain) {
        seq.push_back(best[f * masks + s]);
        packed = packed * 64 + static_cast<std::uint64_t>(seq.back()) + 1;
      }
      packed = packed * 64 + seq.size();
      if (seq.size() > 8 || x.level > 60) packed = 0;  // too long to pack; 0 is never a valid packing
      auto it = packed ? factors.find(packed) : factors.end();
      if (it == factors.end())
        it = factors.insert_or_assign(packed, c.hom(x.objects[f - 1], x.objects[f]).apply(x.level, x.morphisms[f - 1], seq)).first;
      acc = f == i + 1 ? it->second : c.compose(x.objects[i], x.objects[f - 1], x.objects[f], slot.level, it->second, acc);
    }
    key.push_back(acc);
  }
  return key;
}

// Classification diagram -----------------------------------------------------------

std::pair<Sequence, Sequence> PrismCells::cell(int level, CellId c) const {
  const std::uint64_t nq = monotone_count(level, q);
  return {monotone_unrank(c / nq, level, p), monotone_unrank(c % nq, level, q)};
}

CellId PrismCells::cell_id(const Sequence& s1, const Sequence& s2) const {
  const int level = static_cast<int>(s1.size()) - 1;
  return static_cast<CellId>(monotone_rank(s1, p) * monotone_count(level, q) + monotone_rank(s2, q));
}

PrismCells prism(int p, int q, int dim) {
  dim = std::max(dim, p + q);
  PrismCells out;
  out.p = p;
  out.q = q;
  out.space = product(standard_simplex(p, dim), standard_simplex(q, dim));
  out.position.resize(dim + 1);
  for (int n = 0; n <= dim; ++n) {
    out.position[n].assign(out.space.size(n), -1);
    for (CellId c : out.space.nondegenerate(n)) {
      out.position[n][c] = static_cast<int>(out.order.size());
      out.order.emplace_back(n, c);
    }
  }
  return out;
}

CellId ClsDiagram::value(const SSet& x, int p, int q, CellId u, int level, CellId prism_cell) const {
  const PrismCells& pr = prisms[p][q];
  const auto ez = ez_decompose(pr.space, level, prism_cell);
  const CellId base = keys[p][q][u][pr.position[ez.base_level][ez.base]];
  return x.apply(ez.base_level, base, ez.seq);
}

CellId ClsDiagram::find(int p, int q, const std::vector<CellId>& key) const {
  auto it = index[p][q].find(key);
  if (it == index[p][q].end()) throw std::out_of_range("ClsDiagram: not a cell");
  return it->second;
}

ClsDiagram cls_diagram(const MarkedSSet& m, int P, int Q, int jobs) {
  const SSet& x = m.space;
  if (P + Q > x.dim())
    throw TruncationError("cls: bidegree (" + std::to_string(P) + ", " + std::to_string(Q) + ") needs truncation " +
                          std::to_string(P + Q) + ", have " + std::to_string(x.dim()));
  ClsDiagram out;
  out.prisms.assign(P + 1, std::vector<PrismCells>(Q + 1));
  out.keys.assign(P + 1, std::vector<std::vector<std::vector<CellId>>>(Q + 1));
  out.index.assign(P + 1, std::vector<std::unordered_map<std::vector<CellId>, CellId, VecHash>>(Q + 1));
  std::vector<std::vector<std::size_t>> sizes(P + 1, std::vector<std::size_t>(Q + 1));
  const FaceIndex fx(x);
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      PrismCells& pr = out.prisms[p][q] = prism(p, q, P + Q);
      MapSearchOptions opts;
      opts.jobs = jobs;
      // Slice condition: edges of {i} x Delta^q go to marked edges.
      opts.allow = [&pr, &m](int n, CellId a, CellId img) {
        if (n != 1) return true;
        const auto [s1, s2] = pr.cell(1, a);
        return s1[0] != s1[1] || m.marked[img];
      };
      auto& keys = out.keys[p][q];
      for_each_map(pr.space, fx, opts, [&](const SimplicialMap& u) {
        std::vector<CellId> key;
        key.reserve(pr.order.size());
        for (auto [n, c] : pr.order) key.push_back(u.levels[n][c]);
        keys.push_back(std::move(key));
        return true;
      });
      for (std::size_t c = 0; c < keys.size(); ++c) out.index[p][q].emplace(keys[c], static_cast<CellId>(c));
      sizes[p][q] = keys.size();
    }
  BisimplicialSet bx = BisimplicialSet::with_sizes(sizes);
  // Precompose u with (alpha x id) or (id x beta) and look the result up.
  auto pull = [&](int p, int q, CellId u, int p2, int q2, const Sequence& alpha, const Sequence& beta) {
    const PrismCells& tgt = out.prisms[p2][q2];
    const PrismCells& src = out.prisms[p][q];
    std::vector<CellId> key;
    key.reserve(tgt.order.size());
    for (auto [n, c] : tgt.order) {
      auto [s1, s2] = tgt.cell(n, c);
      for (int& v : s1) v = alpha[v];
      for (int& v : s2) v = beta[v];
      key.push_back(out.value(x, p, q, u, n, src.cell_id(s1, s2)));
    }
    return out.find(p2, q2, key);
  };
  auto identity_seq = [](int n) {
    Sequence s(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) s[t] = t;
    return s;
  };
  auto coface = [](int n, int i) {  // [n-1] -> [n]
    Sequence s;
    for (int t = 0; t < n; ++t) s.push_back(t < i ? t : t + 1);
    return s;
  };
  auto codegen = [](int n, int i) {  // [n+1] -> [n]
    Sequence s;
    for (int t = 0; t <= n + 1; ++t) s.push_back(t <= i ? t : t - 1);
    return s;
  };
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q)
      for (CellId u = 0; u < sizes[p][q]; ++u) {
        for (int i = 0; p > 0 && i <= p; ++i)
          bx.hface[p][q][i][u] = pull(p, q, u, p - 1, q, coface(p, i), identity_seq(q));
        for (int i = 0; p < P && i <= p; ++i)
          bx.hdegen[p][q][i][u] = pull(p, q, u, p + 1, q, codegen(p, i), identity_seq(q));
        for (int i = 0; q > 0 && i <= q; ++i)
          bx.vface[p][q][i][u] = pull(p, q, u, p, q - 1, identity_seq(p), coface(q, i));
        for (int i = 0; q < Q && i <= q; ++i)
          bx.vdegen[p][q][i][u] = pull(p, q, u, p, q + 1, identity_seq(p), codegen(q, i));
      }
  out.marked.space = std::move(bx);
  if (P >= 1) {
    out.marked.marked.resize(Q + 1);
    for (int q = 0; q <= Q; ++q) {
      const PrismCells& pr = out.prisms[1][q];
      out.marked.marked[q].assign(sizes[1][q], 1);
      for (CellId u = 0; u < sizes[1][q]; ++u)
        for (CellId e : pr.space.nondegenerate(1))
          if (!m.marked[out.keys[1][q][u][pr.position[1][e]]]) out.marked.marked[q][u] = 0;
    }
  }
  return out;
}

MarkedSSet hc_marked(const RelativeSimplicialCategory& r, const HcNerve& hc) {
  MarkedSSet out{hc.space, {}};
  if (hc.space.dim() >= 1)
    for (const auto& key : hc.keys[1]) out.marked.push_back(r.in_sub(key[0], key[1], 0, key[2]) ? 1 : 0);
  return out;
}

BisimplicialMap theta_map(const RelativeSimplicialCategory& r, const Binerve& b, const HcNerve& hc,
                          const ClsDiagram& cls) {
  const int P = std::min(b.marked.space.P, cls.marked.space.P);
  const int Q = std::min(b.marked.space.Q, cls.marked.space.Q);
  BisimplicialMap f;
  f.levels.assign(P + 1, std::vector<std::vector<CellId>>(Q + 1));
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      const PrismCells& pr = cls.prisms[p][q];
      for (CellId cell = 0; cell < b.marked.space.size(p, q); ++cell) {
        const CellChain x = b.chain(p, q, cell);
        std::vector<CellId> key;
        for (auto [n, c] : pr.order) {
          const auto [t1, t2] = pr.cell(n, c);
          key.push_back(hc.find(n, theta_simplex(r.cat, x, t1, t2)));
        }
        f.levels[p][q].push_back(cls.find(p, q, key));
      }
    }
  return f;
}

}  // namespace nervekit
