#include "stabsim/layered.hpp"

#include <algorithm>
#include <cmath>

#include "stabsim/cost.hpp"
#include "stabsim/database.hpp"
#include "stabsim/errors.hpp"
#include "stabsim/state_catalog.hpp"

namespace stabsim {

namespace {

constexpr unsigned kDiagQubitCap = 16;  // diagonal composites materialize 2^k entries

std::uint64_t qubit_mask(const std::vector<unsigned>& qs) {
  std::uint64_t m = 0;
  for (unsigned q : qs) m |= 1ULL << q;
  return m;
}

CMat diag_to_matrix(const CVec& diag) {
  CMat m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

// Composite matrix of `gate` embedded into the (sorted) union qubit space.
CMat embed_into(const std::vector<unsigned>& union_qubits, const std::vector<unsigned>& gate_qubits,
                const CMat& m) {
  std::vector<unsigned> pos;
  for (unsigned q : gate_qubits) {
    auto it = std::find(union_qubits.begin(), union_qubits.end(), q);
    pos.push_back(static_cast<unsigned>(it - union_qubits.begin()));
  }
  return embed_gate(static_cast<unsigned>(union_qubits.size()), pos, m);
}

struct OpenPlacement {
  std::vector<unsigned> qubits;  // sorted
  std::vector<Gate> prims;
  bool diagonal = true;
  CVec diag = {};   // over the sorted qubits when diagonal
  CMat matrix = {}; // over the sorted qubits when not diagonal
};

OpenPlacement start_placement(const Gate& g) {
  OpenPlacement p;
  p.qubits = g.qubits;
  std::sort(p.qubits.begin(), p.qubits.end());
  p.prims = {g};
  p.diagonal = g.is_diagonal();
  if (p.diagonal) {
    const CMat& m = g.matrix();
    p.diag.resize(m.dim);
    for (std::size_t x = 0; x < m.dim; ++x) {
      // reindex the gate's diagonal onto the sorted qubit order
      std::size_t sub = 0;
      for (std::size_t j = 0; j < g.qubits.size(); ++j) {
        auto it = std::find(p.qubits.begin(), p.qubits.end(), g.qubits[j]);
        sub |= ((x >> (it - p.qubits.begin())) & 1) << j;
      }
      p.diag[x] = m.at(sub, sub);
    }
  } else {
    p.matrix = embed_into(p.qubits, g.qubits, g.matrix());
  }
  return p;
}

// Would fusing `g` into the overlapping placements produce a composite we can
// decompose?  Non-diagonal composites are limited to two qubits.
bool fusable(const std::vector<OpenPlacement>& open, const Gate& g) {
  std::uint64_t mask = qubit_mask(g.qubits);
  bool diagonal = g.is_diagonal();
  std::uint64_t union_mask = mask;
  for (const auto& op : open) {
    if (!(qubit_mask(op.qubits) & mask)) continue;
    union_mask |= qubit_mask(op.qubits);
    diagonal = diagonal && op.diagonal;
  }
  unsigned width = static_cast<unsigned>(__builtin_popcountll(union_mask));
  if (diagonal) return width <= kDiagQubitCap;
  return width <= 2;
}

// Merge placements (qubit-disjoint among themselves) and a trailing gate.
OpenPlacement merge_placements(std::vector<OpenPlacement> parts, const Gate& g) {
  OpenPlacement out;
  for (const auto& p : parts) {
    out.qubits.insert(out.qubits.end(), p.qubits.begin(), p.qubits.end());
    out.diagonal = out.diagonal && p.diagonal;
  }
  for (unsigned q : g.qubits)
    if (std::find(out.qubits.begin(), out.qubits.end(), q) == out.qubits.end())
      out.qubits.push_back(q);
  std::sort(out.qubits.begin(), out.qubits.end());
  out.diagonal = out.diagonal && g.is_diagonal();

  for (const auto& p : parts)
    out.prims.insert(out.prims.end(), p.prims.begin(), p.prims.end());
  out.prims.push_back(g);

  const unsigned k = static_cast<unsigned>(out.qubits.size());
  if (out.diagonal) {
    if (k > kDiagQubitCap) throw InputError("diagonal composite over " + std::to_string(k) + " qubits");
    out.diag.assign(std::size_t(1) << k, cdouble(1, 0));
    auto fold = [&](const std::vector<unsigned>& qs, const CVec& d) {
      for (std::size_t x = 0; x < out.diag.size(); ++x) {
        std::size_t sub = 0;
        for (std::size_t j = 0; j < qs.size(); ++j) {
          auto it = std::find(out.qubits.begin(), out.qubits.end(), qs[j]);
          std::size_t bitpos = it - out.qubits.begin();
          sub |= ((x >> bitpos) & 1) << j;
        }
        out.diag[x] *= d[sub];
      }
    };
    for (const auto& p : parts) fold(p.qubits, p.diag);
    CVec gd(g.matrix().dim);
    for (std::size_t i = 0; i < gd.size(); ++i) gd[i] = g.matrix().at(i, i);
    fold(g.qubits, gd);
    return out;
  }

  if (k > 2)
    throw InputError("unsupported non-diagonal composite over " + std::to_string(k) +
                     " qubits (gate fusion of " + std::to_string(out.prims.size()) + " gates)");
  CMat acc = CMat::identity(std::size_t(1) << k);
  for (const auto& p : parts) {
    CMat part = p.diagonal ? diag_to_matrix(p.diag) : p.matrix;
    acc = mat_mul(embed_into(out.qubits, p.qubits, part), acc);
  }
  acc = mat_mul(embed_into(out.qubits, g.qubits, g.matrix()), acc);
  out.matrix = std::move(acc);
  return out;
}

// Exact expansion over a fixed spanning set of product projectors
// ({z,Z,x,y} per qubit); zero-coefficient terms are dropped.  Works for any
// one- or two-qubit composite, so layerize never needs a support search.
std::optional<ProjectorDecomposition> spanning_decomposition(const CMat& m, unsigned arity) {
  static const char* axes[4] = {"z", "Z", "x", "y"};
  std::vector<std::string> labels;
  if (arity == 1) {
    for (auto a : axes) labels.push_back(a);
  } else if (arity == 2) {
    for (auto a : axes)
      for (auto b : axes) labels.push_back(std::string(a) + b);
  } else {
    return std::nullopt;
  }
  const std::size_t dim = m.dim, cols = labels.size();
  CVec a(dim * dim * cols);
  std::vector<StabilizerState> states;
  for (std::size_t j = 0; j < cols; ++j) {
    states.push_back(labeled_state(labels[j]));
    auto v = to_dense(states.back());
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) a[(r * dim + c) * cols + j] = v[r] * std::conj(v[c]);
  }
  auto solved = lstsq(a, dim * dim, cols, m.a);
  if (solved.residual > 1e-9) return std::nullopt;
  ProjectorDecomposition d;
  d.arity = arity;
  d.source = "searched";
  for (std::size_t j = 0; j < cols; ++j)
    if (std::abs(solved.x[j]) > 1e-10) d.terms.push_back({solved.x[j], states[j]});
  return d;
}

Placement resolve_placement(OpenPlacement&& op) {
  Placement p;
  p.qubits = std::move(op.qubits);
  p.primitive_gates = std::move(op.prims);
  p.diagonal = op.diagonal;
  if (op.diagonal) {
    p.diag = std::move(op.diag);
    if (p.qubits.size() <= 2) p.matrix = diag_to_matrix(p.diag);
    p.decomp = diagonal_decomposition(p.diag);
    return p;
  }
  p.matrix = std::move(op.matrix);
  for (const auto& [name, entry] : database().all()) {
    if (entry.decomp.arity == p.qubits.size() && entry.target.dim == p.matrix.dim &&
        max_abs_diff(entry.target, p.matrix) <= 1e-8) {
      p.decomp = entry.decomp;
      return p;
    }
  }
  if (auto spanned = spanning_decomposition(p.matrix, static_cast<unsigned>(p.qubits.size()))) {
    p.decomp = std::move(*spanned);
    return p;
  }
  auto found = search_decomposition(p.matrix, 16);
  if (!found) {
    std::string names;
    for (const auto& g : p.primitive_gates) names += (names.empty() ? "" : "*") + g.name();
    throw InputError("no projector decomposition found for composite " + names);
  }
  p.decomp = std::move(*found);
  return p;
}

}  // namespace

std::vector<GatePlacement> LayeredCircuit::gate_placements(std::size_t layer) const {
  std::vector<GatePlacement> out;
  for (const auto& p : nc_layers[layer].placements) out.push_back({p.decomp, p.qubits});
  return out;
}

PaddedLayerView LayeredCircuit::padded_view(std::size_t layer) const {
  return PaddedLayerView(gate_placements(layer), n);
}

std::uint64_t LayeredCircuit::padded_kappa(std::size_t layer) const {
  std::uint64_t covered = 0;
  std::uint64_t kappa = 1;
  for (const auto& p : nc_layers[layer].placements) {
    kappa *= p.decomp.rank();
    covered += p.qubits.size();
  }
  return kappa << (n - covered);
}

LayeredCircuit layerize(const Circuit& c) {
  LayeredCircuit lc;
  lc.n = c.n;
  lc.source = c;
  lc.clifford_layers.emplace_back();

  std::vector<OpenPlacement> open;
  std::uint64_t open_mask = 0;

  auto close_layer = [&] {
    if (open.empty()) return;
    std::sort(open.begin(), open.end(),
              [](const OpenPlacement& a, const OpenPlacement& b) { return a.qubits[0] < b.qubits[0]; });
    NonCliffordLayer layer;
    for (auto& op : open) layer.placements.push_back(resolve_placement(std::move(op)));
    lc.nc_layers.push_back(std::move(layer));
    lc.clifford_layers.emplace_back();
    open.clear();
    open_mask = 0;
  };

  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Barrier) {
      close_layer();
      continue;
    }
    if (g.is_clifford()) {
      if (qubit_mask(g.qubits) & open_mask) close_layer();
      lc.clifford_layers.back().push_back(g);
      continue;
    }
    // non-Clifford: fuse with overlapping open placements; a composite we
    // cannot decompose closes the layer and starts a fresh one instead
    if (!fusable(open, g)) close_layer();
    std::vector<OpenPlacement> overlapping;
    std::vector<OpenPlacement> kept;
    const std::uint64_t gm = qubit_mask(g.qubits);
    for (auto& op : open) {
      if (qubit_mask(op.qubits) & gm) overlapping.push_back(std::move(op));
      else kept.push_back(std::move(op));
    }
    open = std::move(kept);
    if (overlapping.empty()) open.push_back(start_placement(g));
    else open.push_back(merge_placements(std::move(overlapping), g));
    open_mask |= gm;
    for (const auto& op : open) open_mask |= qubit_mask(op.qubits);
  }
  close_layer();
  return lc;
}

LayeredCircuit compress_diagonal_layers(const LayeredCircuit& lc) {
  auto layer_diagonal = [&](std::size_t i) {
    for (const auto& p : lc.nc_layers[i].placements)
      if (!p.diagonal) return false;
    return true;
  };

  LayeredCircuit out;
  out.n = lc.n;
  out.source = lc.source;
  out.clifford_layers.emplace_back();

  std::size_t i = 0;
  while (i < lc.nc_layers.size()) {
    // extend the current clifford layer with C_i
    auto& cur = out.clifford_layers.back();
    cur.insert(cur.end(), lc.clifford_layers[i].begin(), lc.clifford_layers[i].end());
    if (!layer_diagonal(i)) {
      out.nc_layers.push_back(lc.nc_layers[i]);
      out.clifford_layers.emplace_back();
      ++i;
      continue;
    }
    // Find the maximal diagonal run starting at i.  Diagonal Clifford gates
    // between run layers commute with everything diagonal and stay ahead of
    // the merged layer; non-diagonal Clifford gates can ride forward out of
    // the run when they stay disjoint from everything they pass.
    std::size_t j = i;
    std::uint64_t union_mask = 0;
    for (const auto& p : lc.nc_layers[i].placements) union_mask |= qubit_mask(p.qubits);
    std::vector<Gate> kept_ahead;  // diagonal inner Clifford gates
    std::vector<Gate> moved;       // non-diagonal gates pushed past the run
    while (j + 1 < lc.nc_layers.size() && layer_diagonal(j + 1)) {
      std::uint64_t next_mask = union_mask;
      for (const auto& p : lc.nc_layers[j + 1].placements) next_mask |= qubit_mask(p.qubits);
      if (static_cast<unsigned>(__builtin_popcountll(next_mask)) > kDiagQubitCap) break;

      std::vector<Gate> tentative_moved = moved;
      std::vector<Gate> tentative_kept;
      bool ok = true;
      for (const auto& g : lc.clifford_layers[j + 1]) {
        if (g.is_diagonal()) {
          for (const auto& m : tentative_moved)
            if (qubit_mask(m.qubits) & qubit_mask(g.qubits)) ok = false;
          tentative_kept.push_back(g);
        } else {
          tentative_moved.push_back(g);
        }
      }
      std::uint64_t layer_support = 0;
      for (const auto& p : lc.nc_layers[j + 1].placements) layer_support |= qubit_mask(p.qubits);
      for (const auto& m : tentative_moved)
        if (qubit_mask(m.qubits) & layer_support) ok = false;
      if (!ok) break;
      moved = std::move(tentative_moved);
      kept_ahead.insert(kept_ahead.end(), tentative_kept.begin(), tentative_kept.end());
      union_mask = next_mask;
      ++j;
    }
    if (j == i) {
      out.nc_layers.push_back(lc.nc_layers[i]);
      out.clifford_layers.emplace_back();
      ++i;
      continue;
    }
    {
      auto& dst = out.clifford_layers.back();
      dst.insert(dst.end(), kept_ahead.begin(), kept_ahead.end());
    }
    // group overlapping placements across the run and fold their diagonals
    std::vector<OpenPlacement> groups;
    for (std::size_t k = i; k <= j; ++k) {
      for (const auto& p : lc.nc_layers[k].placements) {
        std::vector<OpenPlacement> overlapping;
        std::vector<OpenPlacement> kept;
        const std::uint64_t pm = qubit_mask(p.qubits);
        for (auto& grp : groups) {
          if (qubit_mask(grp.qubits) & pm) overlapping.push_back(std::move(grp));
          else kept.push_back(std::move(grp));
        }
        groups = std::move(kept);
        OpenPlacement self;
        self.qubits = p.qubits;
        self.prims = p.primitive_gates;
        self.diagonal = true;
        self.diag = p.diag;
        if (overlapping.empty()) {
          groups.push_back(std::move(self));
        } else {
          // fold `self` into the union of the overlapping groups via a
          // pseudo-gate merge path: reuse merge by treating parts + first prim
          std::vector<OpenPlacement> parts = std::move(overlapping);
          parts.push_back(std::move(self));
          OpenPlacement merged;
          for (const auto& q : parts) {
            merged.qubits.insert(merged.qubits.end(), q.qubits.begin(), q.qubits.end());
            merged.prims.insert(merged.prims.end(), q.prims.begin(), q.prims.end());
          }
          std::sort(merged.qubits.begin(), merged.qubits.end());
          merged.qubits.erase(std::unique(merged.qubits.begin(), merged.qubits.end()),
                              merged.qubits.end());
          merged.diagonal = true;
          merged.diag.assign(std::size_t(1) << merged.qubits.size(), cdouble(1, 0));
          for (const auto& part : parts) {
            for (std::size_t x = 0; x < merged.diag.size(); ++x) {
              std::size_t sub = 0;
              for (std::size_t b = 0; b < part.qubits.size(); ++b) {
                auto it = std::find(merged.qubits.begin(), merged.qubits.end(), part.qubits[b]);
                sub |= ((x >> (it - merged.qubits.begin())) & 1) << b;
              }
              merged.diag[x] *= part.diag[sub];
            }
          }
          groups.push_back(std::move(merged));
        }
      }
    }
    std::sort(groups.begin(), groups.end(),
              [](const OpenPlacement& a, const OpenPlacement& b) { return a.qubits[0] < b.qubits[0]; });
    NonCliffordLayer merged_layer;
    for (auto& grp : groups) merged_layer.placements.push_back(resolve_placement(std::move(grp)));
    out.nc_layers.push_back(std::move(merged_layer));
    out.clifford_layers.emplace_back();
    out.clifford_layers.back() = std::move(moved);  // gates pushed past the run
    i = j + 1;
  }
  // trailing clifford layer
  auto& last = out.clifford_layers.back();
  last.insert(last.end(), lc.clifford_layers.back().begin(), lc.clifford_layers.back().end());
  return out;
}

CircuitStats stats(const LayeredCircuit& lc) {
  CircuitStats st;
  st.n = lc.n;
  st.m = lc.source.gate_count();
  st.d = lc.source.depth();
  st.d_nc = lc.d_nc();
  st.t = lc.source.non_clifford_count();
  double kmax = 0.0;
  for (std::size_t i = 0; i < lc.nc_layers.size(); ++i) {
    double kl = std::log2(static_cast<double>(lc.padded_kappa(i)));
    st.kappa_log2.push_back(kl);
    kmax = std::max(kmax, kl);
  }
  CostQuery q;
  q.n = st.n;
  q.m = st.m;
  q.d = st.d;
  q.d_nc = st.d_nc;
  q.k = kmax;
  q.t = static_cast<double>(st.t);
  if (st.d_nc > 0) {
    q.method = CostMethod::Spir;
    auto spir = predicted_cost(q);
    st.spir_log2_time = spir.log2_time;
    st.spir_log2_space = spir.log2_space;
    q.method = CostMethod::Spc;
    auto spc = predicted_cost(q);
    st.spc_log2_time = spc.log2_time;
    st.spc_log2_space = spc.log2_space;
  }
  return st;
}

}  // namespace stabsim
