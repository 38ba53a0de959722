#include "wdeg/base.hpp"

namespace wdeg {

Family parse_family(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default: throw InvalidInput(std::string("unknown family letter '") + c + "'");
  }
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t ipow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void GroupId::validate(Strictness s) const {
  if (!is_prime(p)) throw InvalidInput("characteristic must be prime, got " + std::to_string(p));
  int min_rank = 1;
  switch (family) {
    case Family::A: min_rank = 1; break;
    case Family::B: min_rank = 2; break;
    case Family::C: min_rank = (s == Strictness::UserInput) ? 2 : 1; break;
    case Family::D: min_rank = (s == Strictness::UserInput) ? 4 : 3; break;
  }
  if (rank < min_rank)
    throw InvalidInput("rank " + std::to_string(rank) + " too small for type " +
                       std::string(1, family_letter(family)));
  if (family == Family::B && p == 2)
    throw InvalidInput("type B in characteristic 2 is not supported (it coincides with type C)");
}

std::string GroupId::str() const {
  return short_str() + "(p=" + std::to_string(p) + ")";
}

std::string GroupId::short_str() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

}  // namespace wdeg
