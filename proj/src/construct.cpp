#include "turanlab/construct.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include "turanlab/graph6.hpp"

namespace turanlab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

void require_order(long long n) {
  if (n > kMaxOrder) throw CapacityError("construction needs " + std::to_string(n) + " vertices (cap is 64)");
}

void add_part_matching(Graph& g, Bits part) {
  const std::vector<int> vs = vertices_of(part);
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) g.add_edge(vs[i], vs[i + 1]);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 0, "P(n) needs n >= 0");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "C(n) needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 0, "K(n) needs n >= 0");
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u) g.add_edge(v, u);
  return g;
}

Graph empty_graph(int n) {
  require(n >= 0, "E(n) needs n >= 0");
  return Graph(n);
}

Graph complete_multipartite(std::span<const int> sizes) {
  long long total = 0;
  for (int s : sizes) {
    require(s >= 0, "part sizes must be non-negative");
    total += s;
  }
  require_order(total);
  Graph g(static_cast<int>(total));
  int start = 0;
  for (int s : sizes) {
    const Bits part = low_mask(start + s) & ~low_mask(start);
    for (int v : bits_of(part))
      for (int u : bits_of(g.vertex_mask() & ~part & ~low_mask(v))) g.add_edge(v, u);
    start += s;
  }
  return g;
}

std::vector<int> turan_part_sizes(int n, int r) {
  require(n >= 0, "T(n,r) needs n >= 0");
  require(r >= 0, "T(n,r) needs r >= 0");
  if (r == 0) return {};
  std::vector<int> sizes(r, n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

Graph turan_graph(int n, int r) {
  if (r == 0) {
    require(n >= 0, "T(n,r) needs n >= 0");
    return Graph(0);
  }
  const std::vector<int> sizes = turan_part_sizes(n, r);
  return complete_multipartite(sizes);
}

long long turan_edge_count(int n, int r) {
  const std::vector<int> sizes = turan_part_sizes(n, r);
  long long inside = 0;
  for (int s : sizes) inside += static_cast<long long>(s) * (s - 1) / 2;
  return static_cast<long long>(n) * (n - 1) / 2 - inside;
}

Graph blow_up(const Graph& g, int p) {
  require(p >= 1, "blow-up needs p >= 1");
  const auto es = edges(g);
  require_order(g.order() + static_cast<long long>(es.size()) * (p - 1));
  Graph h = g;
  for (auto [u, v] : es) {
    Bits clique = bit(u) | bit(v);
    for (int k = 0; k < p - 1; ++k) {
      const int w = h.add_vertex(clique);
      clique |= bit(w);
    }
  }
  return h;
}

Graph odd_balloon(const Graph& g, std::span<const int> lengths) {
  const auto es = edges(g);
  require(lengths.size() == es.size() || lengths.size() == 1,
          "odd_balloon: need one length or one per edge (" + std::to_string(es.size()) + ")");
  long long total = g.order();
  for (std::size_t k = 0; k < es.size(); ++k) {
    const int len = lengths.size() == 1 ? lengths[0] : lengths[k];
    require(len >= 3 && len % 2 == 1, "odd_balloon: lengths must be odd and >= 3, got " + std::to_string(len));
    total += len - 2;
  }
  require_order(total);
  Graph h = g;
  for (std::size_t k = 0; k < es.size(); ++k) {
    const int len = lengths.size() == 1 ? lengths[0] : lengths[k];
    auto [u, v] = es[k];
    int prev = u;
    for (int i = 0; i < len - 2; ++i) prev = h.add_vertex(bit(prev));
    h.add_edge(prev, v);
  }
  return h;
}

Graph odd_balloon(const Graph& g, int length) {
  const int one[] = {length};
  return odd_balloon(g, std::span<const int>(one));
}

bool validate_good_odd_ballooning(const Graph& f, Bits side_a, std::span<const int> lengths) {
  const Bits side_b = f.vertex_mask() & ~side_a;
  for (int v : bits_of(side_a))
    if (f.neighbors(v) & side_a) throw ConstructionError("validate_good_odd_ballooning: A is not independent");
  for (int v : bits_of(side_b))
    if (f.neighbors(v) & side_b) throw ConstructionError("validate_good_odd_ballooning: B is not independent");
  if (popcount(side_a) > popcount(side_b)) throw ConstructionError("validate_good_odd_ballooning: needs |A| <= |B|");
  const auto es = edges(f);
  if (lengths.size() != es.size() && lengths.size() != 1)
    throw ConstructionError("validate_good_odd_ballooning: need one length or one per edge");
  for (std::size_t k = 0; k < es.size(); ++k) {
    const int len = lengths.size() == 1 ? lengths[0] : lengths[k];
    if (len < 3 || len % 2 == 0) throw ConstructionError("validate_good_odd_ballooning: lengths must be odd and >= 3");
    if (len != 3) continue;
    auto [u, v] = es[k];
    const int b = (side_b & bit(u)) ? u : v;
    if (f.degree(b) != 1) return false;
  }
  return true;
}

bool validate_good_odd_ballooning(const Graph& f, std::span<const int> lengths) {
  Bits side = 0;
  if (!bipartition(f, side)) throw ConstructionError("validate_good_odd_ballooning: graph is not bipartite");
  const Bits other = f.vertex_mask() & ~side;
  return validate_good_odd_ballooning(f, popcount(side) <= popcount(other) ? side : other, lengths);
}

Graph k_plus(std::span<const int> part_sizes) {
  require(!part_sizes.empty(), "k_plus needs at least one part");
  const auto [lo, hi] = std::minmax_element(part_sizes.begin(), part_sizes.end());
  require(*hi - *lo <= 2, "k_plus: part sizes must differ by at most 2");
  Graph g = complete_multipartite(part_sizes);
  int start = 0;
  for (int s : part_sizes) {
    add_part_matching(g, low_mask(start + s) & ~low_mask(start));
    start += s;
  }
  return g;
}

Graph g_nr(int n, int r) {
  require(r >= 1, "G_{n,r} needs r >= 1");
  const std::vector<int> sizes = turan_part_sizes(n, r);
  return k_plus(sizes);
}

// ---------------------------------------------------------------------------
// Expressions

struct ConstructionExpr::Node {
  Kind kind;
  std::vector<int> ints;
  std::vector<ConstructionExpr> children;
  Graph literal;
};

#define TURANLAB_NODE(kind_, ints_, children_) \
  ConstructionExpr(std::make_shared<const Node>(Node{Kind::kind_, ints_, children_, Graph()}))

ConstructionExpr ConstructionExpr::path(int n) {
  require(n >= 0, "P(n) needs n >= 0");
  return TURANLAB_NODE(path, {n}, {});
}
ConstructionExpr ConstructionExpr::cycle(int n) {
  require(n >= 3, "C(n) needs n >= 3");
  return TURANLAB_NODE(cycle, {n}, {});
}
ConstructionExpr ConstructionExpr::clique(int n) {
  require(n >= 0, "K(n) needs n >= 0");
  return TURANLAB_NODE(clique, {n}, {});
}
ConstructionExpr ConstructionExpr::empty(int n) {
  require(n >= 0, "E(n) needs n >= 0");
  return TURANLAB_NODE(empty, {n}, {});
}
ConstructionExpr ConstructionExpr::multipartite(std::vector<int> sizes) {
  require(sizes.size() >= 2, "K(n1,..,nr) needs at least two parts");
  for (int s : sizes) require(s >= 0, "part sizes must be non-negative");
  return TURANLAB_NODE(multipartite, std::move(sizes), {});
}
ConstructionExpr ConstructionExpr::turan(int n, int r) {
  require(n >= 0, "T(n,r) needs n >= 0");
  require(r >= 0, "T(n,r) needs r >= 0");
  return TURANLAB_NODE(turan, (std::vector<int>{n, r}), {});
}
ConstructionExpr ConstructionExpr::literal(Graph g) {
  return ConstructionExpr(std::make_shared<const Node>(Node{Kind::literal, {}, {}, std::move(g)}));
}
ConstructionExpr ConstructionExpr::join(std::vector<ConstructionExpr> operands) {
  require(!operands.empty(), "join needs at least one operand");
  return TURANLAB_NODE(join, {}, std::move(operands));
}
ConstructionExpr ConstructionExpr::disjoint_union(std::vector<ConstructionExpr> operands) {
  require(!operands.empty(), "union needs at least one operand");
  return TURANLAB_NODE(disjoint_union, {}, std::move(operands));
}
ConstructionExpr ConstructionExpr::repeat(int times, ConstructionExpr e) {
  require(times >= 0, "repeat needs a non-negative count");
  return TURANLAB_NODE(repeat, {times}, {std::move(e)});
}
ConstructionExpr ConstructionExpr::blow_up(ConstructionExpr e, int p) {
  require(p >= 1, "blow-up needs p >= 1");
  return TURANLAB_NODE(blow_up, {p}, {std::move(e)});
}
ConstructionExpr ConstructionExpr::odd_balloon(ConstructionExpr e, std::vector<int> lengths) {
  require(!lengths.empty(), "balloon needs at least one length");
  for (int l : lengths) require(l >= 3 && l % 2 == 1, "balloon lengths must be odd and >= 3");
  return TURANLAB_NODE(odd_balloon, std::move(lengths), {std::move(e)});
}
ConstructionExpr ConstructionExpr::part_matchings(ConstructionExpr e) {
  return TURANLAB_NODE(part_matchings, {}, {std::move(e)});
}
ConstructionExpr ConstructionExpr::embed_in_part(ConstructionExpr host, int part, ConstructionExpr pattern) {
  require(part >= 0, "embed needs a non-negative part index");
  return TURANLAB_NODE(embed_in_part, {part}, (std::vector<ConstructionExpr>{std::move(host), std::move(pattern)}));
}
ConstructionExpr ConstructionExpr::complement(ConstructionExpr e) {
  return TURANLAB_NODE(complement, {}, {std::move(e)});
}

#undef TURANLAB_NODE

ConstructionExpr::Kind ConstructionExpr::kind() const { return node_->kind; }
std::span<const int> ConstructionExpr::integers() const { return node_->ints; }
std::span<const ConstructionExpr> ConstructionExpr::operands() const { return node_->children; }

Layout ConstructionExpr::eval_layout() const {
  const Node& nd = *node_;
  auto whole = [](Graph g) {
    const Bits all = g.vertex_mask();
    return Layout{std::move(g), {all}};
  };
  switch (nd.kind) {
    case Kind::path:
      return whole(path_graph(nd.ints[0]));
    case Kind::cycle:
      return whole(cycle_graph(nd.ints[0]));
    case Kind::clique:
      return whole(complete_graph(nd.ints[0]));
    case Kind::empty:
      return whole(empty_graph(nd.ints[0]));
    case Kind::literal:
      return whole(nd.literal);
    case Kind::multipartite:
    case Kind::turan: {
      const std::vector<int> sizes = nd.kind == Kind::turan ? turan_part_sizes(nd.ints[0], nd.ints[1]) : nd.ints;
      Layout out{complete_multipartite(sizes), {}};
      int start = 0;
      for (int s : sizes) {
        out.parts.push_back(low_mask(start + s) & ~low_mask(start));
        start += s;
      }
      return out;
    }
    case Kind::join:
    case Kind::disjoint_union: {
      Layout out{Graph(0), {}};
      for (const ConstructionExpr& c : nd.children) {
        Layout sub = c.eval_layout();
        const int off = out.graph.order();
        out.graph = nd.kind == Kind::join ? turanlab::join(out.graph, sub.graph)
                                          : turanlab::disjoint_union(out.graph, sub.graph);
        for (Bits p : sub.parts) out.parts.push_back(off == 64 ? 0 : p << off);
      }
      if (nd.kind == Kind::disjoint_union) out.parts = {out.graph.vertex_mask()};
      return out;
    }
    case Kind::repeat: {
      const Graph unit = nd.children[0].eval();
      require_order(static_cast<long long>(unit.order()) * nd.ints[0]);
      Graph g(0);
      for (int i = 0; i < nd.ints[0]; ++i) g = turanlab::disjoint_union(g, unit);
      return whole(std::move(g));
    }
    case Kind::blow_up:
      return whole(turanlab::blow_up(nd.children[0].eval(), nd.ints[0]));
    case Kind::odd_balloon:
      return whole(turanlab::odd_balloon(nd.children[0].eval(), nd.ints));
    case Kind::complement:
      return whole(turanlab::complement(nd.children[0].eval()));
    case Kind::part_matchings: {
      Layout out = nd.children[0].eval_layout();
      for (Bits p : out.parts) add_part_matching(out.graph, p);
      return out;
    }
    case Kind::embed_in_part: {
      Layout out = nd.children[0].eval_layout();
      const Graph pattern = nd.children[1].eval();
      const int idx = nd.ints[0];
      require(idx < static_cast<int>(out.parts.size()),
              "embed: part index " + std::to_string(idx) + " out of range (" + std::to_string(out.parts.size()) +
                  " parts)");
      const std::vector<int> slots = vertices_of(out.parts[idx]);
      require(pattern.order() <= static_cast<int>(slots.size()),
              "embed: pattern of order " + std::to_string(pattern.order()) + " does not fit in part of size " +
                  std::to_string(slots.size()));
      for (auto [u, v] : edges(pattern)) out.graph.add_edge(slots[u], slots[v]);
      return out;
    }
  }
  throw ConstructionError("unknown expression kind");
}

std::string ConstructionExpr::to_string() const {
  const Node& nd = *node_;
  auto ints = [&](std::size_t from) {
    std::string s;
    for (std::size_t i = from; i < nd.ints.size(); ++i) {
      if (!s.empty() || i > from) s += ',';
      s += std::to_string(nd.ints[i]);
    }
    return s;
  };
  auto kids = [&] {
    std::string s;
    for (std::size_t i = 0; i < nd.children.size(); ++i) {
      if (i) s += ',';
      s += nd.children[i].to_string();
    }
    return s;
  };
  switch (nd.kind) {
    case Kind::path:
      return "P(" + ints(0) + ")";
    case Kind::cycle:
      return "C(" + ints(0) + ")";
    case Kind::clique:
    case Kind::multipartite:
      return "K(" + ints(0) + ")";
    case Kind::empty:
      return "E(" + ints(0) + ")";
    case Kind::turan:
      return "T(" + ints(0) + ")";
    case Kind::literal:
      return "g6(" + write_graph6(nd.literal) + ")";
    case Kind::join:
      return "join(" + kids() + ")";
    case Kind::disjoint_union:
      return "union(" + kids() + ")";
    case Kind::repeat:
      return "repeat(" + ints(0) + "," + kids() + ")";
    case Kind::blow_up:
      return "blowup(" + kids() + "," + ints(0) + ")";
    case Kind::odd_balloon:
      return "balloon(" + kids() + "," + ints(0) + ")";
    case Kind::part_matchings:
      return "matchings(" + kids() + ")";
    case Kind::embed_in_part:
      return "embed(" + nd.children[0].to_string() + "," + ints(0) + "," + nd.children[1].to_string() + ")";
    case Kind::complement:
      return "complement(" + kids() + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Arg {
  bool is_int = false;
  int value = 0;
  std::optional<ConstructionExpr> expr;
  std::size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ConstructionExpr parse_all() {
    ConstructionExpr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw ExpressionError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw ExpressionError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
      throw ExpressionError("expected a name", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  Arg argument() {
    skip_space();
    Arg a;
    a.pos = pos_;
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      std::size_t start = pos_;
      if (text_[pos_] == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ - start > 9 || (pos_ - start == 1 && text_[start] == '-'))
        throw ExpressionError("bad integer", start);
      a.is_int = true;
      a.value = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return a;
    }
    a.expr = parse_expr();
    return a;
  }

  ConstructionExpr parse_expr() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "g6") {
      expect('(');
      const std::size_t body = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      if (pos_ == text_.size()) throw ExpressionError("unterminated g6(...)", body);
      Graph g;
      try {
        g = parse_graph6(text_.substr(body, pos_ - body));
      } catch (const Graph6Error& err) {
        throw ExpressionError(err.what(), body);
      }
      ++pos_;
      return ConstructionExpr::literal(std::move(g));
    }
    std::vector<Arg> args;
    if (peek('(')) {
      ++pos_;
      args.push_back(argument());
      while (peek(',')) {
        ++pos_;
        args.push_back(argument());
      }
      expect(')');
    }
    try {
      return build(name, args, start);
    } catch (const ConstructionError& err) {
      throw ExpressionError(err.what(), start);
    }
  }

  static std::vector<int> ints(const std::vector<Arg>& args, std::size_t from, const std::string& name) {
    std::vector<int> out;
    for (std::size_t i = from; i < args.size(); ++i) {
      if (!args[i].is_int) throw ExpressionError(name + ": expected an integer argument", args[i].pos);
      out.push_back(args[i].value);
    }
    return out;
  }

  static std::vector<ConstructionExpr> exprs(const std::vector<Arg>& args, const std::string& name) {
    std::vector<ConstructionExpr> out;
    for (const Arg& a : args) {
      if (a.is_int) throw ExpressionError(name + ": expected an expression argument", a.pos);
      out.push_back(*a.expr);
    }
    return out;
  }

  static void arity(const std::vector<Arg>& args, std::size_t lo, std::size_t hi, const std::string& name,
                    std::size_t pos) {
    if (args.size() < lo || args.size() > hi) throw ExpressionError(name + ": wrong number of arguments", pos);
  }

  ConstructionExpr build(const std::string& name, const std::vector<Arg>& args, std::size_t pos) {
    constexpr std::size_t many = 64;
    if (name == "P" || name == "C" || name == "E") {
      arity(args, 1, 1, name, pos);
      const int n = ints(args, 0, name)[0];
      if (name == "P") return ConstructionExpr::path(n);
      if (name == "C") return ConstructionExpr::cycle(n);
      return ConstructionExpr::empty(n);
    }
    if (name == "K") {
      arity(args, 1, many, name, pos);
      std::vector<int> v = ints(args, 0, name);
      if (v.size() == 1) return ConstructionExpr::clique(v[0]);
      return ConstructionExpr::multipartite(std::move(v));
    }
    if (name == "T") {
      arity(args, 2, 2, name, pos);
      const std::vector<int> v = ints(args, 0, name);
      return ConstructionExpr::turan(v[0], v[1]);
    }
    if (name == "join" || name == "union") {
      arity(args, 1, many, name, pos);
      std::vector<ConstructionExpr> ops = exprs(args, name);
      return name == "join" ? ConstructionExpr::join(std::move(ops)) : ConstructionExpr::disjoint_union(std::move(ops));
    }
    if (name == "repeat") {
      arity(args, 2, 2, name, pos);
      if (!args[0].is_int || args[1].is_int) throw ExpressionError("repeat(t, expr) expected", pos);
      return ConstructionExpr::repeat(args[0].value, *args[1].expr);
    }
    if (name == "blowup" || name == "balloon") {
      arity(args, 2, name == "blowup" ? 2 : many, name, pos);
      if (args[0].is_int) throw ExpressionError(name + ": first argument must be an expression", pos);
      std::vector<int> v = ints(args, 1, name);
      if (name == "blowup") return ConstructionExpr::blow_up(*args[0].expr, v[0]);
      return ConstructionExpr::odd_balloon(*args[0].expr, std::move(v));
    }
    if (name == "matchings" || name == "complement") {
      arity(args, 1, 1, name, pos);
      std::vector<ConstructionExpr> ops = exprs(args, name);
      return name == "matchings" ? ConstructionExpr::part_matchings(ops[0]) : ConstructionExpr::complement(ops[0]);
    }
    if (name == "embed") {
      arity(args, 3, 3, name, pos);
      if (args[0].is_int || !args[1].is_int || args[2].is_int)
        throw ExpressionError("embed(host, part, pattern) expected", pos);
      return ConstructionExpr::embed_in_part(*args[0].expr, args[1].value, *args[2].expr);
    }
    throw ExpressionError("unknown name '" + name + "'", pos);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstructionExpr parse_expression(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Registry

namespace {

using E = ConstructionExpr;
using Params = std::span<const int>;

struct Builder {
  NamedEntry entry;
  std::size_t min_args;
  std::size_t max_args;
  std::function<std::vector<E>(Params)> build;
};

E k_join_turan(int n, int q, int r) { return E::join({E::clique(q - 1), E::turan(n - q + 1, r)}); }

// K_{t-1,t-1} minus a matching of t-2 edges.
Graph g_st_core(int t) {
  std::vector<int> sides{t - 1, t - 1};
  Graph h = complete_multipartite(sides);
  for (int i = 0; i < t - 2; ++i) h.remove_edge(i, t - 1 + i);
  return h;
}

Graph double_star(int a, int b) {
  Graph g(2);
  g.add_edge(0, 1);
  for (int i = 0; i < a; ++i) g.add_vertex(bit(0));
  for (int i = 0; i < b; ++i) g.add_vertex(bit(1));
  return g;
}

int first_part_size(int n, int r) { return n <= 0 ? 0 : (n + r - 1) / r; }

const std::vector<Builder>& builders() {
  static const std::vector<Builder> table = [] {
    std::vector<Builder> t;
    t.push_back({{"turan", "turan(n,r)", "Turan graph T(n,r)", false, {1, 1}}, 2, 2, [](Params p) {
                   return std::vector<E>{E::turan(p[0], p[1])};
                 }});
    t.push_back({{"kplus", "kplus(n1,...,nr)", "K^+: complete multipartite plus a (near) perfect matching per part",
                  false, {1, 1}},
                 1, 64, [](Params p) {
                   const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
                   require(*hi - *lo <= 2, "kplus: part sizes must differ by at most 2");
                   if (p.size() == 1) return std::vector<E>{E::part_matchings(E::empty(p[0]))};
                   return std::vector<E>{E::part_matchings(E::multipartite({p.begin(), p.end()}))};
                 }});
    t.push_back({{"gnr", "gnr(n,r)", "G_{n,r}: T(n,r) plus a (near) perfect matching in every part", false, {1, 1}},
                 2, 2, [](Params p) {
                   require(p[1] >= 1, "gnr needs r >= 1");
                   return std::vector<E>{E::part_matchings(E::turan(p[0], p[1]))};
                 }});
    t.push_back({{"gstar", "gstar(n)", "G*_n: T(n,2) plus a (near) perfect matching in both parts", false, {2}}, 1, 1,
                 [](Params p) { return std::vector<E>{E::part_matchings(E::turan(p[0], 2))}; }});
    t.push_back({{"c33", "c33", "C_3^3: blow-up of the triangle with p = 2", false, {}}, 0, 0,
                 [](Params) { return std::vector<E>{E::blow_up(E::clique(3), 2)}; }});
    t.push_back({{"cycle_blowup", "cycle_blowup(k,p)", "C_k^{p+1}: every edge of C_k replaced by K_{p+1}", false,
                  {3, 1}},
                 2, 2, [](Params p) {
                   require(p[0] >= 3, "cycle_blowup needs k >= 3");
                   require(p[1] >= 1, "cycle_blowup needs p >= 1");
                   return std::vector<E>{E::blow_up(E::cycle(p[0]), p[1])};
                 }});
    t.push_back({{"icosahedron", "icosahedron", "{P6+3K1+3K1, (K12 u K2)+(K2 u K1)+3K1, 2K3+3K1+3K1} (+ = join)", true,
                  {}},
                 0, 0, [](Params) {
                   return std::vector<E>{
                       E::join({E::path(6), E::empty(3), E::empty(3)}),
                       E::join({E::disjoint_union({E::multipartite({1, 2}), E::clique(2)}),
                                E::disjoint_union({E::clique(2), E::clique(1)}), E::empty(3)}),
                       E::join({E::repeat(2, E::clique(3)), E::empty(3), E::empty(3)}),
                   };
                 }});
    t.push_back({{"general_icosahedron", "general_icosahedron(l,r,m)",
                  "F1..F3 generalizing the icosahedron family; l even >= 4, 2 <= r <= l-2, m >= l+1", true,
                  {4, 2, 5}},
                 3, 3, [](Params p) {
                   const int l = p[0], r = p[1], m = p[2];
                   require(l >= 4 && l % 2 == 0, "general_icosahedron needs even l >= 4");
                   require(r >= 2 && r <= l - 2, "general_icosahedron needs 2 <= r <= l-2");
                   require(m >= l + 1, "general_icosahedron needs m >= l+1");
                   return std::vector<E>{
                       E::join({E::disjoint_union({E::path(l), E::empty(m)}), E::turan(m * (r - 1), r - 1)}),
                       E::join({E::disjoint_union({E::multipartite({1, 2}), E::repeat(m, E::clique(2))}),
                                E::repeat(m, E::clique(2)), E::turan(m * (r - 2), r - 2)}),
                       E::join({E::disjoint_union({E::clique(l / 2), E::clique(l - 1), E::empty(m)}),
                                E::turan(m * (r - 1), r - 1)}),
                   };
                 }});
    t.push_back({{"bi_matching", "bi_matching(l,r,m)",
                  "F1..F4 whose extremal graphs are H + T(n-|H|,r-1); l >= 3, r >= 2, m >= 2l", true, {3, 2, 6}},
                 3, 3, [](Params p) {
                   const int l = p[0], r = p[1], m = p[2];
                   require(l >= 3, "bi_matching needs l >= 3");
                   require(r >= 2, "bi_matching needs r >= 2");
                   require(m >= 2 * l, "bi_matching needs m >= 2l");
                   return std::vector<E>{
                       E::join({E::disjoint_union({E::path(l), E::empty(m)}), E::turan(m * (r - 1), r - 1)}),
                       E::join({E::repeat(m, E::clique(2)), E::repeat(m, E::clique(2)), E::turan(m * (r - 2), r - 2)}),
                       E::join({E::disjoint_union({E::repeat(2, E::clique(l - 1)), E::empty(m)}),
                                E::disjoint_union({E::clique(2), E::empty(m)}), E::turan(m * (r - 2), r - 2)}),
                       E::join({E::disjoint_union({E::clique(l - 1), E::empty(m)}),
                                E::disjoint_union({E::clique(l - 1), E::empty(m)}), E::turan(m * (r - 2), r - 2)}),
                   };
                 }});
    t.push_back({{"k_join_turan", "k_join_turan(n,q,r)", "K_{q-1} + T(n-q+1,r)", false, {1, 1, 1}}, 3, 3,
                 [](Params p) {
                   require(p[1] >= 1 && p[2] >= 1 && p[0] >= p[1] - 1, "k_join_turan needs q,r >= 1 and n >= q-1");
                   return std::vector<E>{k_join_turan(p[0], p[1], p[2])};
                 }});
    t.push_back({{"e_join_turan", "e_join_turan(n,q,r)", "complement(K_{q-1}) + T(n-q+1,r)", false, {1, 1, 1}}, 3, 3,
                 [](Params p) {
                   require(p[1] >= 1 && p[2] >= 1 && p[0] >= p[1] - 1, "e_join_turan needs q,r >= 1 and n >= q-1");
                   return std::vector<E>{E::join({E::empty(p[1] - 1), E::turan(p[0] - p[1] + 1, p[2])})};
                 }});
    t.push_back({{"gnak", "gnak(n,a,k)", "G_{n,a,k}: K_{a-1} + T(n-a+1,2) with K_{k-1,k-1} in one part", false,
                  {3, 1, 2}},
                 3, 3, [](Params p) {
                   const int n = p[0], a = p[1], k = p[2];
                   require(a >= 1, "gnak needs a >= 1");
                   require(k >= 2, "gnak needs k >= 2");
                   require(n >= a - 1 && first_part_size(n - a + 1, 2) >= 2 * (k - 1),
                           "gnak: the part of T(n-a+1,2) must hold K_{k-1,k-1}");
                   return std::vector<E>{E::embed_in_part(k_join_turan(n, a, 2), 1, E::multipartite({k - 1, k - 1}))};
                 }});
    t.push_back({{"gna4prime", "gna4prime(n,a)", "G'_{n,a,4}: K_{a-1} + T(n-a+1,2) with 3K_3 in one part", false,
                  {17, 1}},
                 2, 2, [](Params p) {
                   const int n = p[0], a = p[1];
                   require(a >= 1, "gna4prime needs a >= 1");
                   require(n >= a - 1 && first_part_size(n - a + 1, 2) >= 9,
                           "gna4prime: the part of T(n-a+1,2) must hold 3K_3");
                   return std::vector<E>{E::embed_in_part(k_join_turan(n, a, 2), 1, E::repeat(3, E::clique(3)))};
                 }});
    t.push_back({{"gst", "gst(n,s,t)",
                  "G_{s,t}: K_{s-1} + T(n-s+1,2) with K_{t-1,t-1} minus a (t-2)-matching in one part", false,
                  {5, 2, 2}},
                 3, 3, [](Params p) {
                   const int n = p[0], s = p[1], t = p[2];
                   require(s >= 2 && s <= t, "gst needs 2 <= s <= t");
                   require(n >= s - 1 && first_part_size(n - s + 1, 2) >= 2 * (t - 1),
                           "gst: the part of T(n-s+1,2) must hold K_{t-1,t-1}");
                   return std::vector<E>{E::embed_in_part(k_join_turan(n, s, 2), 1, E::literal(g_st_core(t)))};
                 }});
    t.push_back({{"g33prime", "g33prime(n)", "G'_{3,3}: K_2 + T(n-2,2) with a triangle in one part", false, {7}}, 1, 1,
                 [](Params p) {
                   require(p[0] >= 2 && first_part_size(p[0] - 2, 2) >= 3, "g33prime needs a part of size >= 3");
                   return std::vector<E>{E::embed_in_part(k_join_turan(p[0], 3, 2), 1, E::clique(3))};
                 }});
    t.push_back({{"g33dprime", "g33dprime(n)", "G''_{3,3}: complement(K_2) + T(n-2,2) with a C_4 in one part", false,
                  {9}},
                 1, 1, [](Params p) {
                   require(p[0] >= 2 && first_part_size(p[0] - 2, 2) >= 4, "g33dprime needs a part of size >= 4");
                   return std::vector<E>{
                       E::embed_in_part(E::join({E::empty(2), E::turan(p[0] - 2, 2)}), 1, E::cycle(4))};
                 }});
    t.push_back({{"fst", "fst(s,t[,len])", "F_{s,t}: odd-ballooning of K_{s,t} with cycles of length len >= 5", false,
                  {2, 4}},
                 2, 3, [](Params p) {
                   const int s = p[0], tt = p[1], len = p.size() > 2 ? p[2] : 5;
                   require(s >= 2 && s <= tt, "fst needs 2 <= s <= t");
                   require(s + tt >= 6, "fst needs s + t >= 6");
                   require(len >= 5 && len % 2 == 1, "fst needs odd cycle length >= 5");
                   return std::vector<E>{E::odd_balloon(E::multipartite({s, tt}), {len})};
                 }});
    t.push_back({{"double_star", "double_star(a,b)", "two adjacent centres with a and b leaves", false, {1, 1}}, 2, 2,
                 [](Params p) {
                   require(p[0] >= 1 && p[1] >= 1, "double_star needs a, b >= 1");
                   return std::vector<E>{E::literal(double_star(p[0], p[1]))};
                 }});
    t.push_back({{"double_star_join", "double_star_join(a,b,m)", "double_star(a,b) + complement(K_m)", false,
                  {1, 1, 1}},
                 3, 3, [](Params p) {
                   require(p[0] >= 1 && p[1] >= 1 && p[2] >= 0, "double_star_join needs a, b >= 1, m >= 0");
                   return std::vector<E>{E::join({E::literal(double_star(p[0], p[1])), E::empty(p[2])})};
                 }});
    t.push_back({{"double_star_family", "double_star_family", "{3K_2 + complement(K_10), P_5 + complement(K_10)}",
                  true, {}},
                 0, 0, [](Params) {
                   return std::vector<E>{E::join({E::repeat(3, E::clique(2)), E::empty(10)}),
                                         E::join({E::path(5), E::empty(10)})};
                 }});
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<NamedEntry>& named_registry() {
  static const std::vector<NamedEntry> entries = [] {
    std::vector<NamedEntry> out;
    for (const Builder& b : builders()) out.push_back(b.entry);
    return out;
  }();
  return entries;
}

NamedConstruction named_family(std::string_view name, std::span<const int> params) {
  for (const Builder& b : builders()) {
    if (b.entry.name != name) continue;
    if (params.size() < b.min_args || params.size() > b.max_args)
      throw ConstructionError(b.entry.name + ": wrong number of parameters, expected " + b.entry.signature);
    NamedConstruction out;
    out.name = b.entry.name;
    out.is_family = b.entry.is_family;
    out.expressions = b.build(params);
    for (const E& e : out.expressions) out.members.push_back(e.eval());
    return out;
  }
  throw ConstructionError("unknown named construction '" + std::string(name) + "'");
}

NamedConstruction named_family(std::string_view spec) {
  const std::size_t open = spec.find('(');
  std::string name(spec.substr(0, open));
  std::vector<int> params;
  if (open != std::string_view::npos) {
    if (spec.back() != ')') throw ConstructionError("expected name(p1,...,pk)");
    std::string_view inner = spec.substr(open + 1, spec.size() - open - 2);
    while (!inner.empty()) {
      const std::size_t comma = inner.find(',');
      std::string token(inner.substr(0, comma));
      std::erase_if(token, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ConstructionError("bad parameter '" + token + "'");
      }
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
  }
  std::erase_if(name, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  return named_family(name, params);
}

}  // namespace turanlab
