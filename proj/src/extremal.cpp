#include "sumprod/extremal.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>

#include "sumprod/orbit.hpp"

namespace sumprod {

bool ExtremalSet::contains(Element y) const {
  if (explicit_form) {
    return std::binary_search(elements.begin(), elements.end(), y);
  }
  return member(y, modulus);
}

ExtremalSet construct(const PrimeModulus& m) {
  const std::uint64_t p = m.p();
  if (p > kExplicitCeiling) {
    throw feasibility_error(
        "explicit construction is capped at p <= 2^26; use the implicit "
        "member form");
  }
  std::vector<bool> visited(p, false);
  std::vector<Element> out;
  out.reserve((p - 1) / 2);
  for (Element y = 0; y < p; ++y) {
    if (visited[y]) continue;
    // First unvisited vertex of a component is its least member.
    const Component c = classify(y, m);
    for (Element v : c.members) visited[v] = true;
    switch (c.kind) {
      case ComponentKind::ExceptionalPair:
        out.push_back(0);
        break;
      case ComponentKind::ExceptionalTriple:
        out.push_back(2);
        break;
      case ComponentKind::RootPair:
        out.push_back(c.representative);
        break;
      case ComponentKind::SixCycle:
        out.push_back(y);
        out.push_back(apply_word(Word::TS, y, m));
        out.push_back(apply_word(Word::ST, y, m));
        break;
    }
  }
  std::sort(out.begin(), out.end());
  if (out.size() != cardinality_formula(m)) {
    throw std::logic_error("constructed size disagrees with the cardinality formula");
  }
  return ExtremalSet{m, true, std::move(out), (p - 1) / 2};
}

ExtremalSet implicit_set(const PrimeModulus& m) {
  return ExtremalSet{m, false, {}, (m.p() - 1) / 2};
}

bool member(Element y, const PrimeModulus& m) {
  if (y >= m.p()) throw std::domain_error("element out of range");
  if (y == 0 || y == 2) return true;
  if (y == 1 || y == m.minus_one() || y == m.half()) return false;
  const Element fy = m.add(m.sub(m.mul(y, y), y), 1);
  if (fy == 0) {
    return y < m.sub(1, y);  // only the lesser root is chosen
  }
  const Orbit o = orbit_of(y, m);
  const Element r = *std::min_element(o.members.begin(), o.members.end());
  if (y == r) return true;
  return y == apply_word(Word::TS, r, m) || y == apply_word(Word::ST, r, m);
}

std::uint64_t cardinality_formula(const PrimeModulus& m) {
  const std::uint64_t p = m.p();
  const auto roots = roots_of_unit_trinomial(m);
  const std::uint64_t delta = roots ? 2 : 0;
  if ((p - 5 - delta) % 6 != 0) {
    throw std::logic_error("p - 5 - delta is not divisible by 6");
  }
  const std::uint64_t lhs = 1 + 1 + delta / 2 + 3 * ((p - 5 - delta) / 6);
  const std::uint64_t rhs = (p - 1) / 2;
  if (lhs != rhs) {
    throw std::logic_error("cardinality identity failed");
  }
  return rhs;
}

std::string to_text(const ExtremalSet& s) {
  if (!s.explicit_form) {
    throw std::domain_error("implicit sets have no element list to serialize");
  }
  std::ostringstream out;
  out << "p=" << s.modulus.p() << " size=" << s.elements.size() << " target=1\n";
  for (Element e : s.elements) out << e << "\n";
  return out.str();
}

ExtremalSet parse_text(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("empty set file");
  }
  unsigned long long p = 0, size = 0, target = 0;
  if (std::sscanf(header.c_str(), "p=%llu size=%llu target=%llu", &p, &size,
                  &target) != 3) {
    throw std::invalid_argument("bad header line: " + header);
  }
  if (target != 1) {
    throw std::invalid_argument("only target=1 set files are supported");
  }
  PrimeModulus m(p);
  std::vector<Element> elems;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(line, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad element line: " + line);
    }
    if (pos != line.size()) {
      throw std::invalid_argument("bad element line: " + line);
    }
    if (v >= p) {
      throw std::invalid_argument("element " + std::to_string(v) +
                                  " is not a residue mod " + std::to_string(p));
    }
    elems.push_back(v);
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const std::uint64_t n = elems.size();
  return ExtremalSet{m, true, std::move(elems), n};
}

}  // namespace sumprod
