#include "mekler/appendix_q.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace mekler {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidArgument("finite group: empty table");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidArgument("finite group: table is not square");
    for (Element e : row) {
      if (e >= n) throw InvalidArgument("finite group: entry out of range");
    }
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[i][j]]++) throw InvalidArgument("finite group: row " + std::to_string(i) + " repeats an entry");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[j][i]]++) throw InvalidArgument("finite group: column " + std::to_string(i) + " repeats an entry");
    }
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidArgument("finite group: no two-sided identity");
  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    const auto& row = table_[a];
    const Element b = static_cast<Element>(std::find(row.begin(), row.end(), identity_) - row.begin());
    if (table_[b][a] != identity_) throw InvalidArgument("finite group: element without a two-sided inverse");
    inverse_[a] = b;
  }
  associativity_exhaustive_ = n <= 64;
  auto assoc = [&](Element a, Element b, Element c) { return table_[table_[a][b]][c] == table_[a][table_[b][c]]; };
  if (associativity_exhaustive_) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InvalidArgument("finite group: table is not associative");
  } else {
    Rng rng(0x51ed2701);
    for (int i = 0; i < 100000; ++i) {
      if (!assoc(static_cast<Element>(rng.below(n)), static_cast<Element>(rng.below(n)),
                 static_cast<Element>(rng.below(n)))) {
        throw InvalidArgument("finite group: table is not associative");
      }
    }
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  }
  if (names_.size() != n) throw InvalidArgument("finite group: wrong number of element names");
}

Element FiniteGroup::pow(Element a, std::int64_t n) const {
  Element base = n < 0 ? inv(a) : a;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Element out = identity_;
  while (e > 0) {
    if (e & 1u) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

ElementSet FiniteGroup::all() const {
  ElementSet s(order());
  std::iota(s.begin(), s.end(), Element{0});
  return s;
}

Element FiniteGroup::find(std::string_view name) const {
  for (Element i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InvalidArgument("finite group: no element named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- permutations

Permutation Permutation::identity(std::size_t k) {
  std::vector<std::uint32_t> img(k);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size());
  for (auto i : image_) {
    if (i >= image_.size() || seen[i]++) throw InvalidArgument("permutation: not a bijection");
  }
}

Permutation Permutation::extended(std::size_t k) const {
  if (k < image_.size()) throw InvalidArgument("permutation: cannot shrink degree");
  auto img = image_;
  for (std::size_t i = image_.size(); i < k; ++i) img.push_back(static_cast<std::uint32_t>(i));
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  const std::size_t k = std::max(a.degree(), b.degree());
  const Permutation x = a.extended(k), y = b.extended(k);
  std::vector<std::uint32_t> img(k);
  for (std::size_t i = 0; i < k; ++i) img[i] = x(y(static_cast<std::uint32_t>(i)));
  return Permutation(std::move(img));
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> done(image_.size());
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (done[i] || image_[i] == i) continue;
    out += "(";
    for (std::uint32_t j = i; !done[j]; j = image_[j]) {
      done[j] = 1;
      if (j != i) out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

std::vector<std::uint32_t> read_numbers(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] < '0' || text[i] > '9') throw ParseError("permutation: unexpected character '" + std::string(1, text[i]) + "'");
    std::uint64_t v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v > 1u << 20) throw ParseError("permutation: point too large");
    }
    if (v == 0) throw ParseError("permutation: points are numbered from 1");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("permutation: empty text");
  if (text.front() != '(') {
    const auto pts = read_numbers(text);
    std::vector<std::uint32_t> img;
    for (auto v : pts) img.push_back(v - 1);
    try {
      return Permutation(std::move(img));
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("permutation: one-line notation is not a bijection"));
    }
  }
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t degree = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("permutation: expected '('");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("permutation: unbalanced '('");
    cycles.push_back(read_numbers(text.substr(i + 1, close - i - 1)));
    for (auto v : cycles.back()) degree = std::max(degree, v);
    i = close + 1;
  }
  // Cycles compose right to left, matching operator*.
  Permutation out = Permutation::identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    const auto& c = *it;
    std::vector<char> seen(degree + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (seen[c[k]]++) throw ParseError("permutation: point repeated inside a cycle");
      img[c[k] - 1] = c[(k + 1) % c.size()] - 1;
    }
    out = Permutation(std::move(img)) * out;
  }
  return out;
}

std::vector<Permutation> parse_permutation_list(std::string_view text) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back(parse_permutation(line));
    start = end + 1;
  }
  if (out.empty()) throw ParseError("permutation list: no permutations");
  return out;
}

// ---------------------------------------------------------------- builders

namespace {

struct Closure {
  std::vector<Permutation> elements;
  std::vector<std::vector<Element>> table;
};

Closure closure(std::vector<Permutation> gens, std::size_t max_order) {
  std::size_t k = 0;
  for (const auto& g : gens) k = std::max(k, g.degree());
  for (auto& g : gens) g = g.extended(k);
  Closure c{{Permutation::identity(k)}, {}};
  std::map<Permutation, Element> index{{c.elements.front(), 0}};
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = c.elements[i] * g;
      if (index.count(next)) continue;
      if (c.elements.size() >= max_order) {
        throw InvalidArgument("permutation closure exceeds the maximum order " + std::to_string(max_order));
      }
      index.emplace(next, static_cast<Element>(c.elements.size()));
      c.elements.push_back(std::move(next));
    }
  }
  const std::size_t n = c.elements.size();
  c.table.assign(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c.table[a][b] = index.at(c.elements[a] * c.elements[b]);
  return c;
}

}  // namespace

FiniteGroup from_permutation_generators(std::vector<Permutation> gens, std::size_t max_order) {
  Closure c = closure(std::move(gens), max_order);
  std::vector<std::string> names;
  for (const auto& e : c.elements) names.push_back(e.cycles());
  return FiniteGroup(std::move(c.table), std::move(names));
}

FiniteGroup parse_cayley_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n <= 0) throw ParseError("cayley table: first token must be the positive order");
  std::vector<std::vector<Element>> table(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (auto& row : table) {
    for (auto& e : row) {
      long long v;
      if (!(in >> v)) throw ParseError("cayley table: expected " + std::to_string(n * n) + " entries");
      if (v < 0 || v >= n) throw ParseError("cayley table: entry out of range");
      e = static_cast<Element>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("cayley table: trailing data");
  return FiniteGroup(std::move(table));
}

std::string to_cayley_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (const auto& row : g.table()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group: order must be positive");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : "g^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("symmetric group: degree must be positive");
  if (n == 1) return from_permutation_generators({Permutation::identity(1)});
  std::vector<std::uint32_t> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % static_cast<std::uint32_t>(n);
  return from_permutation_generators({Permutation(swap), Permutation(cycle)});
}

FiniteGroup sl2_group(std::uint32_t q) {
  if (q == 2 || !is_prime(q)) throw InvalidArgument("sl2_group: q must be an odd prime");
  auto index = [q](std::uint32_t a, std::uint32_t b) { return a * q + b - 1; };
  auto matrix_perm = [&](std::uint32_t m00, std::uint32_t m01, std::uint32_t m10, std::uint32_t m11) {
    std::vector<std::uint32_t> img(q * q - 1);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        img[index(a, b)] = index((m00 * a + m01 * b) % q, (m10 * a + m11 * b) % q);
      }
    return Permutation(std::move(img));
  };
  Closure c = closure({matrix_perm(1, 1, 0, 1), matrix_perm(1, 0, 1, 1)}, kDefaultMaxOrder);
  // The columns of the matrix are the images of (1,0) and (0,1).
  std::vector<std::string> names;
  for (const auto& pm : c.elements) {
    const std::uint32_t c1 = pm(index(1, 0)) + 1, c2 = pm(index(0, 1)) + 1;
    names.push_back("[[" + std::to_string(c1 / q) + "," + std::to_string(c2 / q) + "],[" + std::to_string(c1 % q) +
                    "," + std::to_string(c2 % q) + "]]");
  }
  return FiniteGroup(std::move(c.table), std::move(names));
}

FiniteGroup mekler_cayley_table(const GroupContext& ctx, std::size_t max_order) {
  const std::uint32_t p = ctx.p().value();
  const std::size_t nv = ctx.num_vertices();
  const auto& basis = ctx.central_basis();
  const std::size_t dims = nv + basis.size();
  std::size_t order = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    if (order > max_order / p) throw InvalidArgument("mekler cayley table: group order exceeds " + std::to_string(max_order));
    order *= p;
  }
  auto decode = [&](std::size_t code) {
    std::vector<Coset::Entry> gen;
    std::vector<CentralVector::Entry> cen;
    for (std::uint32_t i = 0; i < nv; ++i, code /= p) {
      if (code % p) gen.emplace_back(VertexId{i}, static_cast<std::uint32_t>(code % p));
    }
    for (std::size_t i = 0; i < basis.size(); ++i, code /= p) {
      if (code % p) cen.emplace_back(basis[i], static_cast<std::uint32_t>(code % p));
    }
    return GroupElement{Coset::from_sorted(ctx.p(), std::move(gen)), CentralVector::from_sorted(ctx.p(), std::move(cen))};
  };
  auto encode = [&](const GroupElement& g) {
    std::size_t code = 0, scale = 1;
    for (std::uint32_t i = 0; i < nv; ++i, scale *= p) code += scale * g.gen[VertexId{i}];
    for (const auto& pr : basis) {
      code += scale * g.cen[pr];
      scale *= p;
    }
    return static_cast<Element>(code);
  };
  std::vector<GroupElement> elems;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < order; ++c) {
    elems.push_back(decode(c));
    names.push_back(to_string(ctx, elems.back()));
  }
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a][b] = encode(mul(ctx, elems[a], elems[b]));
  return FiniteGroup(std::move(table), std::move(names));
}

// ---------------------------------------------------------------- subgroups

Subgroup subgroup_of(const FiniteGroup& g, const ElementSet& elements) {
  if (elements.empty()) throw InvalidArgument("subgroup: empty subset");
  std::vector<std::int64_t> local(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) local.at(elements[i]) = static_cast<std::int64_t>(i);
  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(g.name(elements[a]));
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = local[g.mul(elements[a], elements[b])];
      if (c < 0) throw InvalidArgument("subgroup: subset is not closed");
      table[a][b] = static_cast<Element>(c);
    }
  }
  return Subgroup{FiniteGroup(std::move(table), std::move(names)), elements};
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& h) {
  try {
    subgroup_of(g, h);
  } catch (const InvalidArgument&) {
    return false;
  }
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y : h) {
      if (!std::binary_search(h.begin(), h.end(), g.mul(g.mul(x, y), g.inv(x)))) return false;
    }
  }
  return true;
}

ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& gens) {
  std::vector<char> in(g.order());
  std::deque<Element> queue{g.identity()};
  in[g.identity()] = 1;
  while (!queue.empty()) {
    const Element a = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      const Element b = g.mul(a, s);
      if (!in[b]) {
        in[b] = 1;
        queue.push_back(b);
      }
    }
  }
  ElementSet out;
  for (Element a = 0; a < g.order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------- powers and roots

std::vector<Element> power_map(const FiniteGroup& g, std::int64_t n) {
  std::vector<Element> out(g.order());
  for (Element a = 0; a < g.order(); ++a) out[a] = g.pow(a, n);
  return out;
}

namespace {

void require_root_exponent(std::int64_t n) {
  if (n < 2) throw InvalidArgument("root counts need n >= 2");
}

}  // namespace

std::size_t nth_roots_count(const FiniteGroup& g, Element x, std::int64_t n) {
  require_root_exponent(n);
  const auto pm = power_map(g, n);
  return static_cast<std::size_t>(std::count(pm.begin(), pm.end(), pm.at(x)));
}

ElementSet a_nm_set(const FiniteGroup& g, std::int64_t n, std::size_t m) {
  require_root_exponent(n);
  if (m < 1) throw InvalidArgument("a_nm_set: m must be positive");
  const auto pm = power_map(g, n);
  std::vector<std::size_t> roots(g.order());
  for (Element y : pm) ++roots[y];
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x)
    if (roots[pm[x]] <= m) out.push_back(x);
  return out;
}

ElementSet power_image(const FiniteGroup& g, std::int64_t n) {
  if (n < 1) throw InvalidArgument("power_image: n must be positive");
  auto pm = power_map(g, n);
  std::sort(pm.begin(), pm.end());
  pm.erase(std::unique(pm.begin(), pm.end()), pm.end());
  return pm;
}

bool unique_root_extraction_check(const FiniteGroup& g, const std::vector<std::int64_t>& ns) {
  for (auto n : ns) {
    if (a_nm_set(g, n, 1).size() != g.order()) return false;
  }
  return true;
}

bool unique_root_extraction_check(const FiniteGroup& g, std::int64_t n_max) {
  if (n_max < 2) throw InvalidArgument("unique_root_extraction_check: n_max must be at least 2");
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 2; n <= n_max; ++n) ns.push_back(n);
  return unique_root_extraction_check(g, ns);
}

// ---------------------------------------------------------------- covers

namespace {

using Bits = std::vector<std::uint64_t>;

struct CoverSearch {
  std::size_t n;
  std::size_t words;
  std::size_t s_size;
  std::vector<Bits> sets;                      // distinct translates
  std::vector<Element> reps;                   // translate representative t
  std::vector<std::vector<std::size_t>> hits;  // element -> sets containing it
  std::uint64_t node_limit;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::size_t best;
  std::vector<std::size_t> best_choice;
  std::vector<std::size_t> choice;

  static std::size_t count(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  void run(Bits& covered, std::size_t uncovered) {
    if (aborted) return;
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    if (uncovered == 0) {
      if (choice.size() < best) {
        best = choice.size();
        best_choice = choice;
      }
      return;
    }
    const std::size_t lower = (uncovered + s_size - 1) / s_size;
    if (choice.size() + lower >= best) return;
    std::size_t target = 0;
    for (std::size_t w = 0; w < covered.size(); ++w) {
      if (~covered[w]) {
        target = w * 64 + static_cast<std::size_t>(__builtin_ctzll(~covered[w]));
        break;
      }
    }
    for (std::size_t id : hits[target]) {
      Bits next = covered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] |= sets[id][w];
      choice.push_back(id);
      run(next, words * 64 - count(next));
      choice.pop_back();
      if (aborted) return;
    }
  }
};

}  // namespace

CoverResult covering_number(const FiniteGroup& g, const ElementSet& s, std::size_t cap, std::uint64_t node_limit) {
  if (s.empty()) throw InvalidArgument("covering_number: empty set");
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;
  CoverSearch search;
  search.n = n;
  search.words = words;
  search.s_size = s.size();
  search.node_limit = node_limit;
  search.hits.assign(n, {});
  std::map<Bits, std::size_t> seen;
  std::size_t identity_set = 0;
  for (Element t = 0; t < n; ++t) {
    Bits b(words, 0);
    for (Element x : s) {
      const Element y = g.mul(t, x);
      b[y / 64] |= std::uint64_t{1} << (y % 64);
    }
    auto [it, fresh] = seen.emplace(b, search.sets.size());
    if (fresh) {
      search.sets.push_back(b);
      search.reps.push_back(t);
    }
    if (t == g.identity()) identity_set = it->second;
  }
  for (std::size_t id = 0; id < search.sets.size(); ++id)
    for (Element y = 0; y < n; ++y)
      if (search.sets[id][y / 64] >> (y % 64) & 1u) search.hits[y].push_back(id);
  // Padding bits past n count as covered.
  Bits full(words, 0);
  for (Element y = 0; y < n; ++y) full[y / 64] |= std::uint64_t{1} << (y % 64);
  auto pad = [&](Bits b) {
    for (std::size_t w = 0; w < words; ++w) b[w] |= ~full[w];
    return b;
  };

  // Greedy: largest gain, ties to the earliest translate.
  std::vector<std::size_t> greedy;
  {
    Bits covered = pad(Bits(words, 0));
    for (std::size_t w = 0; w < words; ++w) covered[w] |= search.sets[identity_set][w];
    greedy.push_back(identity_set);
    while (CoverSearch::count(covered) < words * 64) {
      std::size_t best_id = 0, best_gain = 0;
      for (std::size_t id = 0; id < search.sets.size(); ++id) {
        std::size_t gain = 0;
        for (std::size_t w = 0; w < words; ++w) gain += static_cast<std::size_t>(__builtin_popcountll(search.sets[id][w] & ~covered[w]));
        if (gain > best_gain) {
          best_gain = gain;
          best_id = id;
        }
      }
      greedy.push_back(best_id);
      for (std::size_t w = 0; w < words; ++w) covered[w] |= search.sets[best_id][w];
    }
  }

  CoverResult r;
  r.greedy_bound = greedy.size();
  std::vector<std::size_t> chosen = greedy;
  if (n <= cap) {
    // Left-multiplying a cover by t_1^-1 gives a cover containing S itself.
    search.best = greedy.size();
    search.best_choice = greedy;
    search.choice = {identity_set};
    Bits covered = pad(search.sets[identity_set]);
    search.run(covered, words * 64 - CoverSearch::count(covered));
    chosen = search.best_choice;
    r.exact = !search.aborted;
    r.nodes = search.nodes;
  }
  r.number = chosen.size();
  for (std::size_t id : chosen) r.certificate.translates.push_back(search.reps[id]);
  r.certificate.covered = verify_cover(g, s, r.certificate);
  return r;
}

bool verify_cover(const FiniteGroup& g, const ElementSet& s, const CoverCertificate& cert) {
  std::vector<char> hit(g.order());
  for (Element t : cert.translates)
    for (Element x : s) hit.at(g.mul(t, x)) = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// ---------------------------------------------------------------- coset covers

CosetCoverCheck coset_cover_check(const FiniteGroup& g, const ElementSet& h, std::uint32_t p, std::size_t m) {
  CosetCoverCheck c;
  if (!is_normal_subgroup(g, h)) {
    c.message = "H is not a normal subgroup";
    return c;
  }
  const std::size_t index = g.order() / h.size();
  const Subgroup sub = subgroup_of(g, h);
  const bool h_in_a = a_nm_set(sub.group, p, m).size() == h.size();
  c.hypotheses = is_prime(p) && p > index && h_in_a;
  if (!c.hypotheses) {
    c.message = "hypotheses fail: need p prime, p > [G:H] = " + std::to_string(index) + ", and H inside A_{p,m}(H)";
    return c;
  }
  auto in_h = [&](Element x) { return std::binary_search(h.begin(), h.end(), x); };
  const auto pm = power_map(g, p);
  c.roots_stay_in_h = true;
  for (Element x = 0; x < g.order(); ++x) {
    if (in_h(pm[x]) && !in_h(x)) c.roots_stay_in_h = false;
  }
  const ElementSet a_g = a_nm_set(g, p, m);
  c.inclusion = true;
  for (Element local : a_nm_set(sub.group, p, m)) {
    if (!std::binary_search(a_g.begin(), a_g.end(), h[local])) c.inclusion = false;
  }
  std::vector<char> assigned(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    c.representatives.push_back(x);
    for (Element y : h) assigned[g.mul(x, y)] = 1;
  }
  c.covered = verify_cover(g, a_g, CoverCertificate{c.representatives, true});
  c.message = std::to_string(c.representatives.size()) + " coset representatives, |A_{p,m}(G)| = " +
              std::to_string(a_g.size());
  return c;
}

// ---------------------------------------------------------------- report

void append_property_q_report(Report& report, const std::vector<NamedGroup>& groups, std::int64_t n, std::size_t m,
                              std::size_t cover_cap) {
  for (const auto& [name, g] : groups) {
    auto& s = report.section("qprobe/" + name);
    const auto a = a_nm_set(g, n, m);
    const auto img = power_image(g, n);
    s.fact("order", std::to_string(g.order()));
    s.fact("associativity", g.associativity_exhaustive() ? "verified on every triple" : "verified on a sample");
    s.fact("n", std::to_string(n));
    s.fact("m", std::to_string(m));
    s.fact("|A_{n,m}|", std::to_string(a.size()));
    s.fact("|G^n|", std::to_string(img.size()));
    s.fact("roots_of_e", std::to_string(nth_roots_count(g, g.identity(), n)));

    auto cover_facts = [&](const std::string& label, const ElementSet& set) {
      if (set.empty()) {
        s.fact("cover(" + label + ")", "none: the set is empty, so no translates cover G");
        return;
      }
      const auto c = covering_number(g, set, cover_cap);
      s.fact("cover(" + label + ")", std::to_string(c.number) + (c.exact ? " (exact)" : " (greedy upper bound)"));
      s.fact("cover(" + label + ")/|G|*|S|",
             std::to_string(static_cast<double>(c.number) * static_cast<double>(set.size()) /
                            static_cast<double>(g.order())));
      s.check("cover(" + label + ") certificate re-verifies", c.certificate.covered && verify_cover(g, set, c.certificate));
      s.check("cover(" + label + ") * |S| >= |G|", c.number * set.size() >= g.order());
      s.check("greedy bound >= cover(" + label + ")", c.greedy_bound >= c.number,
              "greedy " + std::to_string(c.greedy_bound));
    };
    cover_facts("G^n", img);
    cover_facts("A_{n,m}", a);
    s.fact("unique_root_extraction(n <= " + std::to_string(n) + ")",
           n >= 2 && unique_root_extraction_check(g, n) ? "true" : "false");
    s.notes.push_back(
        "every nonempty subset of a finite group is generic (|G| translates suffice); the exact covering number is "
        "reported as the finite proxy, not as a test of genericity or stability");
  }
}

}  // namespace mekler
