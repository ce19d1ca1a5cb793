#include "sumprod/orbit.hpp"

#include <algorithm>

namespace sumprod {

namespace {

// S3 as permutations of three points: S swaps 0,1 and T swaps 1,2.
// kPerm[w][i] is the image of point i under word w.
constexpr std::array<std::array<int, 3>, 6> kPerm = {{
    {0, 1, 2},  // Id
    {1, 0, 2},  // S
    {0, 2, 1},  // T
    {1, 2, 0},  // ST
    {2, 0, 1},  // TS
    {2, 1, 0},  // STS
}};

constexpr int word_index(const std::array<int, 3>& perm) {
  for (int w = 0; w < 6; ++w) {
    if (kPerm[w] == perm) return w;
  }
  return -1;
}

constexpr std::array<std::array<int, 6>, 6> make_compose_table() {
  std::array<std::array<int, 6>, 6> table{};
  for (int w1 = 0; w1 < 6; ++w1) {
    for (int w2 = 0; w2 < 6; ++w2) {
      std::array<int, 3> prod{};
      for (int i = 0; i < 3; ++i) prod[i] = kPerm[w1][kPerm[w2][i]];
      table[w1][w2] = word_index(prod);
    }
  }
  return table;
}

constexpr auto kCompose = make_compose_table();

static_assert(kCompose[int(Word::S)][int(Word::S)] == int(Word::Id));
static_assert(kCompose[int(Word::T)][int(Word::T)] == int(Word::Id));
static_assert(kCompose[int(Word::S)][int(Word::T)] == int(Word::ST));
static_assert(kCompose[int(Word::ST)][int(Word::ST)] == int(Word::TS));

Element unit_trinomial_at(Element y, const PrimeModulus& m) {
  return m.add(m.sub(m.mul(y, y), y), 1);
}

}  // namespace

const char* word_name(Word w) {
  switch (w) {
    case Word::Id: return "Id";
    case Word::S: return "S";
    case Word::T: return "T";
    case Word::ST: return "ST";
    case Word::TS: return "TS";
    case Word::STS: return "STS";
  }
  return "?";
}

Word compose(Word w1, Word w2) {
  return static_cast<Word>(kCompose[static_cast<int>(w1)][static_cast<int>(w2)]);
}

Element apply_word(Word w, Element y, const PrimeModulus& m) {
  if (y >= m.p()) throw std::domain_error("element out of range");
  switch (w) {
    case Word::Id:
      return y;
    case Word::S:
      return m.sub(1, y);
    case Word::T:
      if (y == 0) throw std::domain_error("T undefined at 0");
      return m.inv(y);
    case Word::ST:
      if (y == 0) throw std::domain_error("ST undefined at 0");
      return m.sub(1, m.inv(y));
    case Word::TS:
      if (y == 1) throw std::domain_error("TS undefined at 1");
      return m.inv(m.sub(1, y));
    case Word::STS:
      if (y == 1) throw std::domain_error("STS undefined at 1");
      return m.mul(y, m.inv(m.sub(y, 1)));
  }
  throw std::domain_error("bad word");
}

std::vector<Word> fixed_words(Element y, const PrimeModulus& m) {
  if (y >= m.p()) throw std::domain_error("element out of range");
  std::vector<Word> out{Word::Id};
  if (y == m.half()) out.push_back(Word::S);
  if (y == 1 || y == m.minus_one()) out.push_back(Word::T);
  if (unit_trinomial_at(y, m) == 0) {
    out.push_back(Word::ST);
    out.push_back(Word::TS);
  }
  if (y == 0 || y == 2) out.push_back(Word::STS);
  return out;
}

Orbit orbit_of(Element x, const PrimeModulus& m) {
  if (x >= m.p()) throw std::domain_error("element out of range");
  if (x == 0 || x == 1 || x == 2 || x == m.half() || x == m.minus_one()) {
    throw std::domain_error("non-generic vertex: " + std::to_string(x) +
                            " lies in an exceptional component");
  }
  if (unit_trinomial_at(x, m) == 0) {
    throw std::domain_error("non-generic vertex: " + std::to_string(x) +
                            " is a root of X^2 - X + 1");
  }
  Orbit o;
  o.base = x;
  const Element one_minus = m.sub(1, x);
  const Element i1 = m.inv(one_minus);  // 1/(1-x)
  const Element ix = m.inv(x);
  o.members = {x,
               one_minus,
               i1,
               m.neg(m.mul(x, i1)),  // x/(x-1) = -x/(1-x)
               m.sub(1, ix),
               ix};
  return o;
}

const char* component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::ExceptionalPair: return "ExceptionalPair";
    case ComponentKind::ExceptionalTriple: return "ExceptionalTriple";
    case ComponentKind::RootPair: return "RootPair";
    case ComponentKind::SixCycle: return "SixCycle";
  }
  return "?";
}

Component classify(Element y, const PrimeModulus& m) {
  if (y >= m.p()) throw std::domain_error("element out of range");
  Component c;
  c.delta_contribution = 0;
  if (y == 0 || y == 1) {
    c.kind = ComponentKind::ExceptionalPair;
    c.members = {0, 1};
  } else if (y == 2 || y == m.half() || y == m.minus_one()) {
    c.kind = ComponentKind::ExceptionalTriple;
    c.members = {2, m.half(), m.minus_one()};
    std::sort(c.members.begin(), c.members.end());
  } else if (unit_trinomial_at(y, m) == 0) {
    c.kind = ComponentKind::RootPair;
    const Element other = m.sub(1, y);  // the second root, = y^-1
    c.members = {std::min(y, other), std::max(y, other)};
    c.delta_contribution = 2;
  } else {
    c.kind = ComponentKind::SixCycle;
    const Orbit o = orbit_of(y, m);
    c.members.assign(o.members.begin(), o.members.end());
    std::sort(c.members.begin(), c.members.end());
  }
  c.representative = c.members.front();
  return c;
}

CensusRecord census(const PrimeModulus& m) {
  const std::uint64_t p = m.p();
  if (p > kCensusCeiling) {
    throw feasibility_error("census capped at p <= 2^26");
  }
  CensusRecord r{};
  r.p = p;
  const Element half = m.half();
  const Element minus_one = m.minus_one();
  for (Element y = 0; y < p; ++y) {
    if (y == 0) {
      ++r.pair_components;
      continue;
    }
    if (y == 1 || y == half || y == minus_one) continue;
    if (y == 2) {
      ++r.triple_components;
      continue;
    }
    const Element fy = m.add(m.sub(m.mul(y, y), y), 1);
    if (fy == 0) {
      if (y < m.sub(1, y)) ++r.root_pair_components;  // count at the lesser root
      continue;
    }
    // Generic vertex; count the six-cycle at its least member only.
    const Element one_minus = m.sub(1, y);
    const Element i1 = m.inv(one_minus);
    const Element ix = m.inv(y);
    const std::array<Element, 5> rest = {one_minus, i1, m.neg(m.mul(y, i1)),
                                         m.sub(1, ix), ix};
    if (std::all_of(rest.begin(), rest.end(), [y](Element v) { return y < v; })) {
      ++r.six_cycle_components;
      r.six_cycle_reps.push_back(y);
    }
  }
  r.delta = static_cast<int>(2 * r.root_pair_components);
  return r;
}

std::uint64_t census_checksum(const CensusRecord& r) {
  std::uint64_t sum = 0;
  for (Element rep : r.six_cycle_reps) sum += rep;  // wraps mod 2^64
  return sum;
}

std::string census_csv_row(const CensusRecord& r) {
  return std::to_string(r.p) + "," + std::to_string(r.delta) + "," +
         std::to_string(r.six_cycle_components) + "," +
         std::to_string(census_checksum(r));
}

}  // namespace sumprod
