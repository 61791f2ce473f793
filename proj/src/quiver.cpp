#include "quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nfrob {

namespace {

// Aho-Corasick automaton over arrow indices, recognizing the relation words
// as factors. Walks that never touch a terminal node are exactly the
// relation-free paths.
struct FactorAutomaton {
  std::vector<std::map<std::size_t, std::size_t>> children;
  std::vector<std::size_t> fail;
  std::vector<bool> terminal;
  std::size_t alphabet;

  explicit FactorAutomaton(std::size_t alphabet_size) : alphabet(alphabet_size) {
    children.emplace_back();
    fail.push_back(0);
    terminal.push_back(false);
  }

  void add_word(const std::vector<std::size_t>& word) {
    std::size_t node = 0;
    for (std::size_t a : word) {
      auto it = children[node].find(a);
      if (it == children[node].end()) {
        children[node][a] = children.size();
        node = children.size();
        children.emplace_back();
        fail.push_back(0);
        terminal.push_back(false);
      } else {
        node = it->second;
      }
    }
    terminal[node] = true;
  }

  void build() {
    std::vector<std::size_t> queue;
    for (const auto& [a, child] : children[0]) {
      fail[child] = 0;
      queue.push_back(child);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t node = queue[qi];
      terminal[node] = terminal[node] || terminal[fail[node]];
      for (const auto& [a, child] : children[node]) {
        std::size_t f = fail[node];
        while (f != 0 && !children[f].count(a)) f = fail[f];
        auto it = children[f].find(a);
        fail[child] = (it != children[f].end() && it->second != child)
                          ? it->second
                          : 0;
        queue.push_back(child);
      }
    }
  }

  std::size_t step(std::size_t node, std::size_t a) const {
    for (;;) {
      auto it = children[node].find(a);
      if (it != children[node].end()) return it->second;
      if (node == 0) return 0;
      node = fail[node];
    }
  }
};

struct PathRecord {
  std::vector<std::size_t> word;  // arrow indices in composition order
  std::size_t source;
  std::size_t target;
  std::size_t node;
};

}  // namespace

Algebra path_algebra(const Quiver& q, const Ring& ring, std::size_t bound) {
  if (q.vertices.empty())
    throw Error(ErrorCode::ValidationError, "quiver needs at least one vertex");
  std::map<std::string, std::size_t> vertex_index;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) {
    if (!vertex_index.emplace(q.vertices[i], i).second)
      throw Error(ErrorCode::ValidationError,
                  "duplicate vertex '" + q.vertices[i] + "'");
  }

  // arrows sorted by name so that index order is lexicographic name order
  std::vector<QuiverArrow> arrows = q.arrows;
  std::sort(arrows.begin(), arrows.end(),
            [](const QuiverArrow& a, const QuiverArrow& b) {
              return a.name < b.name;
            });
  std::map<std::string, std::size_t> arrow_index;
  std::vector<std::size_t> arrow_source(arrows.size()), arrow_target(arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (!arrow_index.emplace(arrows[i].name, i).second)
      throw Error(ErrorCode::ValidationError,
                  "duplicate arrow name '" + arrows[i].name + "'");
    auto s = vertex_index.find(arrows[i].source);
    auto t = vertex_index.find(arrows[i].target);
    if (s == vertex_index.end() || t == vertex_index.end())
      throw Error(ErrorCode::ValidationError,
                  "arrow '" + arrows[i].name + "' has an unknown endpoint");
    arrow_source[i] = s->second;
    arrow_target[i] = t->second;
  }

  FactorAutomaton automaton(arrows.size());
  for (const auto& rel : q.relations) {
    if (rel.size() < 2)
      throw Error(ErrorCode::ValidationError,
                  "relations must be paths of length >= 2");
    std::vector<std::size_t> word;
    for (const auto& name : rel) {
      auto it = arrow_index.find(name);
      if (it == arrow_index.end())
        throw Error(ErrorCode::ValidationError,
                    "relation uses unknown arrow '" + name + "'");
      word.push_back(it->second);
    }
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (arrow_target[word[i]] != arrow_source[word[i + 1]])
        throw Error(ErrorCode::ValidationError,
                    "relation is not a composable path");
    automaton.add_word(word);
  }
  automaton.build();

  // Finiteness: a reachable cycle among live (vertex, node) states yields
  // arbitrarily long relation-free paths.
  const std::size_t node_count = automaton.children.size();
  auto state_id = [&](std::size_t v, std::size_t node) {
    return v * node_count + node;
  };
  const std::size_t state_count = q.vertices.size() * node_count;
  std::vector<int> color(state_count, 0);  // 0 unvisited, 1 on stack, 2 done
  struct Frame {
    std::size_t state;
    std::size_t next_arrow;
  };
  for (std::size_t v0 = 0; v0 < q.vertices.size(); ++v0) {
    if (color[state_id(v0, 0)] != 0) continue;
    std::vector<Frame> stack{{state_id(v0, 0), 0}};
    color[state_id(v0, 0)] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      std::size_t v = f.state / node_count;
      std::size_t node = f.state % node_count;
      bool advanced = false;
      while (f.next_arrow < arrows.size()) {
        std::size_t a = f.next_arrow++;
        if (arrow_source[a] != v) continue;
        std::size_t next_node = automaton.step(node, a);
        if (automaton.terminal[next_node]) continue;
        std::size_t next = state_id(arrow_target[a], next_node);
        if (color[next] == 1)
          throw Error(ErrorCode::InfiniteDimensional,
                      "path algebra has infinitely many relation-free paths");
        if (color[next] == 0) {
          color[next] = 1;
          stack.push_back({next, 0});
          advanced = true;
          break;
        }
      }
      if (!advanced && f.next_arrow >= arrows.size()) {
        color[f.state] = 2;
        stack.pop_back();
      }
    }
  }

  // Enumerate the basis: vertices in input order, then paths by
  // (length, lexicographic arrow-name sequence).
  std::vector<PathRecord> paths;
  std::vector<PathRecord> layer;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    std::size_t node = automaton.step(0, a);
    if (automaton.terminal[node]) continue;
    layer.push_back({{a}, arrow_source[a], arrow_target[a], node});
  }
  while (!layer.empty()) {
    paths.insert(paths.end(), layer.begin(), layer.end());
    if (q.vertices.size() + paths.size() > bound)
      throw Error(ErrorCode::LimitExceeded,
                  "path algebra basis exceeds bound " + std::to_string(bound));
    std::vector<PathRecord> next_layer;
    for (const PathRecord& p : layer)
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (arrow_source[a] != p.target) continue;
        std::size_t node = automaton.step(p.node, a);
        if (automaton.terminal[node]) continue;
        PathRecord ext = p;
        ext.word.push_back(a);
        ext.target = arrow_target[a];
        ext.node = node;
        next_layer.push_back(std::move(ext));
      }
    layer = std::move(next_layer);
  }

  const std::size_t nv = q.vertices.size();
  const std::size_t n = nv + paths.size();
  std::map<std::vector<std::size_t>, std::size_t> word_index;
  for (std::size_t i = 0; i < paths.size(); ++i)
    word_index[paths[i].word] = nv + i;

  std::vector<Scalar> table(n * n * n, Scalar::zero(ring));
  const Scalar one = Scalar::one(ring);
  auto set_c = [&](std::size_t i, std::size_t j, std::size_t k) {
    table[(i * n + j) * n + k] = one;
  };
  auto src = [&](std::size_t i) {
    return i < nv ? i : paths[i - nv].source;
  };
  auto tgt = [&](std::size_t i) {
    return i < nv ? i : paths[i - nv].target;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (tgt(i) != src(j)) continue;  // non-composable product is zero
      if (i < nv && j < nv) {
        set_c(i, j, i);
      } else if (i < nv) {
        set_c(i, j, j);
      } else if (j < nv) {
        set_c(i, j, i);
      } else {
        std::vector<std::size_t> word = paths[i - nv].word;
        word.insert(word.end(), paths[j - nv].word.begin(),
                    paths[j - nv].word.end());
        auto it = word_index.find(word);
        if (it != word_index.end()) set_c(i, j, it->second);
        // absent: the concatenation contains a relation, product is zero
      }
    }

  Vec unit = zero_vec(ring, n);
  for (std::size_t v = 0; v < nv; ++v) unit[v] = one;

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& v : q.vertices) labels.push_back("e_" + v);
  for (const auto& p : paths) {
    std::string label;
    for (std::size_t k = 0; k < p.word.size(); ++k) {
      if (k) label += "*";
      label += arrows[p.word[k]].name;
    }
    labels.push_back(label);
  }

  return Algebra(ring, n, std::move(table), std::move(unit), std::move(labels));
}

}  // namespace nfrob
