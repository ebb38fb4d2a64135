#include "mekler/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mekler {

GroupContext::GroupContext(Graph graph, Prime p) : graph_(std::move(graph)), p_(p) {
  niceness_ = check_nice(graph_);
  const std::uint32_t n = static_cast<std::uint32_t>(graph_.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (!graph_.adjacent(VertexId{a}, VertexId{b})) central_basis_.push_back({VertexId{a}, VertexId{b}});
    }
  }
  if (!niceness_.is_nice) {
    std::string why;
    if (!niceness_.enough_vertices) why += " fewer than two vertices;";
    if (!niceness_.triangle_free) why += " has a triangle;";
    if (!niceness_.square_free) why += " has a 4-cycle;";
    if (!niceness_.separation_witness_failures.empty()) {
      why += " " + std::to_string(niceness_.separation_witness_failures.size()) +
             " vertex pairs without a separating vertex;";
    }
    why.pop_back();
    warnings_.push_back("graph is not nice:" + why);
  }
}

std::optional<CentralPair> GroupContext::central_pair(VertexId a, VertexId b) const {
  if (a == b || graph_.adjacent(a, b)) return std::nullopt;
  return a < b ? CentralPair{a, b} : CentralPair{b, a};
}

bool GroupContext::contains(const GroupElement& a) const {
  if (a.gen.modulus() != p_ || a.cen.modulus() != p_) return false;
  for (const auto& [v, c] : a.gen.entries()) {
    if (v.index >= graph_.size()) return false;
  }
  for (const auto& [pr, c] : a.cen.entries()) {
    if (pr.hi.index >= graph_.size() || !(pr.lo < pr.hi) || graph_.adjacent(pr.lo, pr.hi)) return false;
  }
  return true;
}

GroupElement identity(const GroupContext& ctx) { return {Coset(ctx.p()), CentralVector(ctx.p())}; }

GroupElement generator(const GroupContext& ctx, VertexId v) {
  if (v.index >= ctx.num_vertices()) throw InvalidArgument("generator: vertex id out of range");
  return {Coset::from_sorted(ctx.p(), {{v, 1u}}), CentralVector(ctx.p())};
}

GroupElement generator(const GroupContext& ctx, const Vertex& v) { return generator(ctx, ctx.id_of(v)); }

GroupElement from_coset(const GroupContext& ctx, Coset c) {
  if (c.modulus() != ctx.p()) throw ModulusMismatch("from_coset: modulus mismatch");
  return {std::move(c), CentralVector(ctx.p())};
}

GroupElement central_element(const GroupContext& ctx, CentralVector z) {
  if (z.modulus() != ctx.p()) throw ModulusMismatch("central_element: modulus mismatch");
  return {Coset(ctx.p()), std::move(z)};
}

CentralVector cocycle(const GroupContext& ctx, const Coset& a, const Coset& b) {
  const std::uint32_t p = ctx.p().value();
  std::vector<std::pair<CentralPair, std::int64_t>> terms;
  for (const auto& [u, au] : a.entries()) {
    for (const auto& [v, bv] : b.entries()) {
      if (!(v < u)) break;
      if (ctx.adjacent(u, v)) continue;
      terms.emplace_back(CentralPair{v, u}, p - mod_mul(au, bv, p));
    }
  }
  return CentralVector::from_terms(ctx.p(), std::move(terms));
}

CentralVector bracket(const GroupContext& ctx, const Coset& a, const Coset& b) {
  const std::uint32_t p = ctx.p().value();
  std::vector<std::pair<CentralPair, std::int64_t>> terms;
  for (const auto& [u, au] : a.entries()) {
    for (const auto& [v, bv] : b.entries()) {
      if (u == v || ctx.adjacent(u, v)) continue;
      const std::uint32_t prod = mod_mul(au, bv, p);
      if (u < v) {
        terms.emplace_back(CentralPair{u, v}, prod);
      } else {
        terms.emplace_back(CentralPair{v, u}, p - prod);
      }
    }
  }
  return CentralVector::from_terms(ctx.p(), std::move(terms));
}

bool commute_mod_center(const GroupContext& ctx, const Coset& a, const Coset& b) {
  return bracket(ctx, a, b).empty();
}

GroupElement mul(const GroupContext& ctx, const GroupElement& a, const GroupElement& b) {
  if (a.gen.modulus() != ctx.p() || b.gen.modulus() != ctx.p()) {
    throw ModulusMismatch("mul: element does not belong to this context");
  }
  GroupElement out{a.gen + b.gen, a.cen + b.cen};
  out.cen += cocycle(ctx, a.gen, b.gen);
  return out;
}

GroupElement inv(const GroupContext& ctx, const GroupElement& a) {
  GroupElement out{-a.gen, -a.cen};
  out.cen += cocycle(ctx, a.gen, a.gen);
  return out;
}

GroupElement pow(const GroupContext& ctx, const GroupElement& a, std::int64_t k) {
  // a^p = e, so only k mod p matters; a^k = x^{kg} z^{kc} beta(g,g)^{k(k-1)/2}.
  const std::uint32_t p = ctx.p().value();
  const std::int64_t r = mod_reduce(k, p);
  GroupElement out{a.gen.scaled(r), a.cen.scaled(r)};
  out.cen += cocycle(ctx, a.gen, a.gen).scaled(r * (r - 1) / 2);
  return out;
}

GroupElement commutator(const GroupContext& ctx, const GroupElement& g, const GroupElement& h) {
  return mul(ctx, mul(ctx, inv(ctx, g), inv(ctx, h)), mul(ctx, g, h));
}

std::vector<VertexId> support(const GroupElement& a) { return a.gen.support(); }
std::size_t length(const GroupElement& a) { return a.gen.size(); }
bool is_central(const GroupElement& a) { return a.gen.empty(); }
bool is_vertex_like(const GroupElement& a) { return a.gen.size() == 1; }

bool vertex_like_infinite_degree(const GroupContext& ctx, const GroupElement& a) {
  if (!is_vertex_like(a)) return false;
  return degree_class(ctx.vertex(a.gen.entries()[0].first)).infinite;
}

FpMatrix<CentralPair, VertexId> bracket_matrix(const GroupContext& ctx, const Coset& a) {
  const std::uint32_t p = ctx.p().value();
  std::vector<VertexId> columns;
  for (std::uint32_t i = 0; i < ctx.num_vertices(); ++i) columns.push_back(VertexId{i});
  FpMatrix<CentralPair, VertexId> m(ctx.p(), std::move(columns));
  // Row (s,t): coefficient of c_{st} in lambda(a, b) is a_s b_t - a_t b_s.
  std::vector<CentralPair> pairs;
  for (const auto& [u, au] : a.entries()) {
    for (std::uint32_t w = 0; w < ctx.num_vertices(); ++w) {
      if (auto pr = ctx.central_pair(u, VertexId{w})) pairs.push_back(*pr);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const CentralPair& pr : pairs) {
    const std::uint32_t as = a[pr.lo], at = a[pr.hi];
    auto row = Coset::from_terms(ctx.p(), {{pr.hi, as}, {pr.lo, p - at}});
    if (!row.empty()) m.add_row(pr, std::move(row));
  }
  return m;
}

FpMatrix<std::size_t, VertexId> centralizer_system(const GroupContext& ctx, const Coset& a) {
  const Graph& g = ctx.graph();
  const std::uint32_t p = ctx.p().value();
  std::vector<VertexId> columns;
  if (a.empty()) {
    for (std::uint32_t i = 0; i < ctx.num_vertices(); ++i) columns.push_back(VertexId{i});
    return FpMatrix<std::size_t, VertexId>(ctx.p(), std::move(columns));
  }
  // Vertices outside the support survive only if adjacent to all of it; a
  // support vertex is never its own neighbor, so the AND excludes the support.
  std::vector<std::uint64_t> common(g.num_words(), ~std::uint64_t{0});
  for (const auto& [u, au] : a.entries()) {
    const auto row = g.adjacency_row(u);
    for (std::size_t k = 0; k < common.size(); ++k) common[k] &= row[k];
  }
  for (std::size_t k = 0; k < common.size(); ++k) {
    std::uint64_t word = common[k];
    while (word) {
      const auto bit = static_cast<std::uint32_t>(std::countr_zero(word));
      const std::uint32_t idx = static_cast<std::uint32_t>(k * 64 + bit);
      if (idx < ctx.num_vertices()) columns.push_back(VertexId{idx});
      word &= word - 1;
    }
  }
  for (const auto& [u, au] : a.entries()) columns.push_back(u);
  FpMatrix<std::size_t, VertexId> m(ctx.p(), std::move(columns));
  const auto entries = a.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const auto [s, as] = entries[i];
      const auto [t, at] = entries[j];
      if (ctx.adjacent(s, t)) continue;
      m.add_row(m.num_rows(), Coset::from_terms(ctx.p(), {{t, as}, {s, p - at}}));
    }
  }
  return m;
}

CentralizerDim centralizer_dim_mod_center(const GroupContext& ctx, const GroupElement& a) {
  if (is_central(a)) return {ctx.num_vertices(), true};
  return {kernel_dim(centralizer_system(ctx, a.gen)), false};
}

InducedAutomorphism::InducedAutomorphism(const GroupContext& ctx, VertexPermutation sigma)
    : sigma_(std::move(sigma)) {
  if (!is_automorphism(ctx.graph(), sigma_)) {
    throw InvalidArgument("permutation is not an automorphism of the graph");
  }
}

InducedAutomorphism InducedAutomorphism::identity(const GroupContext& ctx) {
  return InducedAutomorphism(ctx, VertexPermutation::identity(ctx.num_vertices()));
}

Coset InducedAutomorphism::on_coset(const Coset& c) const {
  std::vector<std::pair<VertexId, std::int64_t>> terms;
  for (const auto& [v, a] : c.entries()) terms.emplace_back(sigma_(v), a);
  return Coset::from_terms(c.modulus(), std::move(terms));
}

GroupElement InducedAutomorphism::operator()(const GroupContext& ctx, const GroupElement& a) const {
  // Image of the normal form, factor by factor; reordering the permuted
  // generators is what produces the extra central terms.
  GroupElement out = mekler::identity(ctx);
  for (const auto& [v, e] : a.gen.entries()) {
    out = mul(ctx, out, from_coset(ctx, Coset::from_sorted(ctx.p(), {{sigma_(v), e}})));
  }
  // c_{uv} = [x_u, x_v] maps to [x_su, x_sv], which is c^-1 when s reverses the pair.
  const std::uint32_t p = ctx.p().value();
  std::vector<std::pair<CentralPair, std::int64_t>> terms;
  for (const auto& [pr, c] : a.cen.entries()) {
    const VertexId su = sigma_(pr.lo), sv = sigma_(pr.hi);
    if (su < sv) {
      terms.emplace_back(CentralPair{su, sv}, c);
    } else {
      terms.emplace_back(CentralPair{sv, su}, p - c);
    }
  }
  out.cen += CentralVector::from_terms(ctx.p(), std::move(terms));
  return out;
}

InducedAutomorphism InducedAutomorphism::inverse(const GroupContext& ctx) const {
  return InducedAutomorphism(ctx, sigma_.inverse());
}

GroupElement induced_automorphism(const GroupContext& ctx, const VertexPermutation& sigma,
                                  const GroupElement& a) {
  return InducedAutomorphism(ctx, sigma)(ctx, a);
}

InducedAutomorphism pi_r(const GroupContext& ctx, const std::set<NaturalPair>& r_edges) {
  return InducedAutomorphism(ctx, pair_swap_automorphism(r_edges, ctx.graph()));
}

Coset random_coset(const GroupContext& ctx, Rng& rng) {
  std::vector<Coset::Entry> entries;
  const std::uint32_t p = ctx.p().value();
  for (std::uint32_t i = 0; i < ctx.num_vertices(); ++i) {
    const auto v = static_cast<std::uint32_t>(rng.below(p));
    if (v != 0) entries.emplace_back(VertexId{i}, v);
  }
  return Coset::from_sorted(ctx.p(), std::move(entries));
}

GroupElement random_central(const GroupContext& ctx, Rng& rng) {
  std::vector<CentralVector::Entry> entries;
  const std::uint32_t p = ctx.p().value();
  for (const CentralPair& pr : ctx.central_basis()) {
    const auto v = static_cast<std::uint32_t>(rng.below(p));
    if (v != 0) entries.emplace_back(pr, v);
  }
  return central_element(ctx, CentralVector::from_sorted(ctx.p(), std::move(entries)));
}

GroupElement random_element(const GroupContext& ctx, Rng& rng) {
  Coset gen = random_coset(ctx, rng);
  GroupElement z = random_central(ctx, rng);
  return {std::move(gen), std::move(z.cen)};
}

void enumerate_cosets(const GroupContext& ctx, std::size_t max_support,
                      const std::function<void(const Coset&)>& fn) {
  const std::uint32_t n = static_cast<std::uint32_t>(ctx.num_vertices());
  const std::uint32_t p = ctx.p().value();
  std::vector<Coset::Entry> entries;
  // Depth-first over increasing vertex ids; each level picks a vertex and a
  // nonzero exponent, emitting the coset at every depth >= 1.
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t start) {
    if (entries.size() == max_support) return;
    for (std::uint32_t v = start; v < n; ++v) {
      for (std::uint32_t e = 1; e < p; ++e) {
        entries.emplace_back(VertexId{v}, e);
        fn(Coset::from_sorted(ctx.p(), entries));
        extend(v + 1);
        entries.pop_back();
      }
    }
  };
  extend(0);
}

std::string to_string(const GroupContext& ctx, const GroupElement& a) {
  if (a.gen.empty() && a.cen.empty()) return "e";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : a.gen.entries()) {
    if (!first) out << " * ";
    first = false;
    out << "x[" << ctx.vertex(v).encode() << "]^" << e;
  }
  if (!a.cen.empty()) {
    if (!first) out << " * ";
    out << "z{";
    bool first_pair = true;
    for (const auto& [pr, c] : a.cen.entries()) {
      if (!first_pair) out << ", ";
      first_pair = false;
      out << "(" << ctx.vertex(pr.lo).encode() << "," << ctx.vertex(pr.hi).encode() << "):" << c;
    }
    out << "}";
  }
  return out.str();
}

namespace {

class ElementParser {
 public:
  ElementParser(const GroupContext& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

  GroupElement parse() {
    GroupElement out = identity(ctx_);
    skip_ws();
    if (s_.empty()) fail("empty element");
    while (true) {
      out = mul(ctx_, out, factor());
      skip_ws();
      if (pos_ == s_.size()) break;
      expect('*');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("element parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  std::size_t digits_end(std::size_t from) const {
    while (from < s_.size() && std::isdigit(static_cast<unsigned char>(s_[from]))) ++from;
    return from;
  }

  // Consumes exactly one encoded vertex by its grammar (gadget encodings
  // contain commas, so we cannot split on them).
  VertexId vertex() {
    skip_ws();
    const std::size_t start = pos_;
    if (s_.substr(pos_, 2) == "n:") {
      pos_ = digits_end(pos_ + 2);
    } else if (s_.substr(pos_, 2) == "g:") {
      std::size_t q = digits_end(pos_ + 2);
      if (q >= s_.size() || s_[q] != ',') fail("bad gadget vertex");
      q = digits_end(q + 1);
      if (q >= s_.size() || s_[q] != ':') fail("bad gadget vertex");
      ++q;
      while (q < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[q])) || s_[q] == '.')) ++q;
      pos_ = q;
    } else {
      fail("expected vertex");
    }
    try {
      return ctx_.id_of(Vertex::decode(s_.substr(start, pos_ - start)));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  GroupElement factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected factor");
    const char c = s_[pos_++];
    if (c == 'e') return identity(ctx_);
    if (c == 'x') {
      expect('[');
      const VertexId v = vertex();
      expect(']');
      std::int64_t e = 1;
      if (peek('^')) {
        ++pos_;
        e = integer();
      }
      return pow(ctx_, generator(ctx_, v), e);
    }
    if (c == 'z') {
      expect('{');
      std::vector<std::pair<CentralPair, std::int64_t>> terms;
      if (!peek('}')) {
        while (true) {
          expect('(');
          const VertexId u = vertex();
          expect(',');
          const VertexId v = vertex();
          expect(')');
          expect(':');
          const std::int64_t k = integer();
          auto pr = ctx_.central_pair(u, v);
          if (!pr) fail("pair is not a central basis pair");
          terms.emplace_back(*pr, u < v ? k : -k);
          if (peek(',')) {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect('}');
      return central_element(ctx_, CentralVector::from_terms(ctx_.p(), std::move(terms)));
    }
    --pos_;
    fail("unexpected character");
  }

  const GroupContext& ctx_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupElement parse_element(const GroupContext& ctx, std::string_view text) {
  return ElementParser(ctx, text).parse();
}

}  // namespace mekler
