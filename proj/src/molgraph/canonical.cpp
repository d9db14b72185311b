//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/molgraph/canonical.h"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "confmotif/error.h"

namespace confmotif {
namespace {

using Certificate = std::vector<std::int64_t>;
using Permutation = std::vector<int>;

class Canonicalizer {
public:
  explicit Canonicalizer(const LabeledGraph &graph)
      : graph_(graph), n_(graph.size()), adj_(n_) {
    for (const auto &e: graph.edges) {
      adj_[e.a].push_back({ e.b, e.label });
      adj_[e.b].push_back({ e.a, e.label });
    }
  }

  CanonicalForm run() {
    std::vector<std::int64_t> sorted = graph_.labels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<int> colors(n_);
    for (int v = 0; v < n_; ++v)
      colors[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), graph_.labels[v])
          - sorted.begin());

    std::vector<int> path;
    search(colors, path);

    CanonicalForm form;
    form.key = CanonicalKey(encode(best_cert_));
    form.rank.assign(n_, 0);
    for (int pos = 0; pos < n_; ++pos)
      form.rank[best_order_[pos]] = pos;
    return form;
  }

private:
  struct Arc {
    int to;
    std::int64_t label;
  };

  // Refines colors to the coarsest equitable partition. Output colors are
  // dense ranks, ordered first by the input color.
  std::vector<int> refine(std::vector<int> colors) const {
    int num_cells = -1;
    std::vector<std::pair<std::int64_t, int>> sig;
    while (true) {
      std::vector<std::pair<int, std::vector<std::pair<std::int64_t, int>>>>
          keys(n_);
      for (int v = 0; v < n_; ++v) {
        sig.clear();
        for (const Arc &arc: adj_[v])
          sig.push_back({ arc.label, colors[arc.to] });
        std::sort(sig.begin(), sig.end());
        keys[v] = { colors[v], sig };
      }

      std::vector<int> idx(n_);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](int x, int y) { return keys[x] < keys[y]; });

      std::vector<int> next(n_);
      int cell = 0;
      for (int k = 0; k < n_; ++k) {
        if (k > 0 && keys[idx[k]] != keys[idx[k - 1]])
          ++cell;
        next[idx[k]] = cell;
      }
      const int count = n_ == 0 ? 0 : cell + 1;
      colors = std::move(next);
      if (count == num_cells)
        return colors;
      num_cells = count;
    }
  }

  Certificate certificate(const Permutation &order) const {
    std::vector<int> pos(n_);
    for (int k = 0; k < n_; ++k)
      pos[order[k]] = k;

    Certificate cert;
    cert.reserve(2 + n_ + 3 * graph_.edges.size());
    cert.push_back(n_);
    for (int k = 0; k < n_; ++k)
      cert.push_back(graph_.labels[order[k]]);

    std::vector<std::tuple<int, int, std::int64_t>> edges;
    for (const auto &e: graph_.edges) {
      const int a = pos[e.a], b = pos[e.b];
      edges.emplace_back(std::min(a, b), std::max(a, b), e.label);
    }
    std::sort(edges.begin(), edges.end());
    cert.push_back(static_cast<std::int64_t>(edges.size()));
    for (const auto &[a, b, label]: edges) {
      cert.push_back(a);
      cert.push_back(b);
      cert.push_back(label);
    }
    return cert;
  }

  void record_automorphism(const Permutation &from, const Permutation &to) {
    Permutation gamma(n_);
    for (int k = 0; k < n_; ++k)
      gamma[from[k]] = to[k];
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v)
      identity = gamma[v] == v;
    if (!identity)
      automorphisms_.push_back(std::move(gamma));
  }

  void visit_leaf(const std::vector<int> &colors) {
    Permutation order(n_);
    for (int v = 0; v < n_; ++v)
      order[colors[v]] = v;
    Certificate cert = certificate(order);

    if (first_order_.empty()) {
      first_order_ = order;
      first_cert_ = cert;
      best_order_ = std::move(order);
      best_cert_ = std::move(cert);
      return;
    }
    if (cert == first_cert_)
      record_automorphism(first_order_, order);
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    } else if (cert == best_cert_) {
      record_automorphism(best_order_, order);
    }
  }

  // Orbits of the target cell under stored automorphisms that fix `path`.
  std::vector<int> orbit_roots(const std::vector<int> &path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation &gamma: automorphisms_) {
      bool fixes = true;
      for (int v: path)
        fixes = fixes && gamma[v] == v;
      if (!fixes)
        continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gamma[v]);
        if (a != b)
          parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v)
      parent[v] = find(v);
    return parent;
  }

  void search(const std::vector<int> &input, std::vector<int> &path) {
    const std::vector<int> colors = refine(input);

    std::vector<int> cell_size(n_, 0);
    for (int c: colors)
      ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      visit_leaf(colors);
      return;
    }

    std::vector<int> tried;
    for (int w = 0; w < n_; ++w) {
      if (colors[w] != target)
        continue;
      // Automorphisms recorded in earlier branches can merge candidates.
      const std::vector<int> orbit = orbit_roots(path);
      if (std::any_of(tried.begin(), tried.end(),
                      [&](int t) { return orbit[t] == orbit[w]; }))
        continue;
      tried.push_back(w);

      std::vector<int> child(n_);
      for (int v = 0; v < n_; ++v)
        child[v] = 2 * colors[v] + (v == w ? 0 : 1);
      path.push_back(w);
      search(child, path);
      path.pop_back();
    }
  }

  static void put_varint(std::string &out, std::int64_t signed_value) {
    std::uint64_t v = (static_cast<std::uint64_t>(signed_value) << 1)
                      ^ static_cast<std::uint64_t>(signed_value >> 63);
    do {
      unsigned char byte = v & 0x7f;
      v >>= 7;
      if (v != 0)
        byte |= 0x80;
      out.push_back(static_cast<char>(byte));
    } while (v != 0);
  }

  static std::string encode(const Certificate &cert) {
    std::string out;
    for (std::int64_t x: cert)
      put_varint(out, x);
    return out;
  }

  const LabeledGraph &graph_;
  int n_;
  std::vector<std::vector<Arc>> adj_;

  Permutation first_order_, best_order_;
  Certificate first_cert_, best_cert_;
  std::vector<Permutation> automorphisms_;
};

int hex_value(char c) {
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c: bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0)
    throw ParseError("canonical key has odd hex length", 0);
  std::string bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_value(hex[i]), lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0)
      throw ParseError("canonical key contains a non-hex digit", 0);
    bytes.push_back(static_cast<char>(hi * 16 + lo));
  }
  return CanonicalKey(std::move(bytes));
}

CanonicalForm canonical_form(const LabeledGraph &graph) {
  return Canonicalizer(graph).run();
}

std::int64_t atom_label(const Atom &atom, int mark) {
  const std::int64_t charge = atom.is_dummy() ? 0 : atom.formal_charge;
  return (static_cast<std::int64_t>(mark) << 32)
         | (static_cast<std::int64_t>(atom.atomic_number) << 8)
         | (charge + 128);
}

LabeledGraph labeled_graph(const Molecule &mol) {
  LabeledGraph graph;
  graph.labels.reserve(mol.num_atoms());
  for (const Atom &a: mol.atoms())
    graph.labels.push_back(atom_label(a));
  for (const Bond &b: mol.bonds())
    graph.edges.push_back({ b.a, b.b, static_cast<std::int64_t>(b.order) });
  return graph;
}

CanonicalKey canonical_key(const Molecule &mol) {
  return canonical_key(labeled_graph(mol));
}

}  // namespace confmotif
