#ifndef WDEG_BASE_HPP
#define WDEG_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdeg {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

Family parse_family(char c);

// Epsilon coordinates are stored doubled so that half-integral spin
// weights of B/D stay in plain integers.
using EpsVec = std::vector<int64_t>;

// Thrown when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a computation would exceed the configured resource limits.
// Distinct from InvalidInput so callers (and the CLI exit code) can tell
// "you asked for something malformed" from "this is too big to certify".
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (family, rank, characteristic).  Rank guards follow the small-rank
// conventions used throughout: A needs n>=1, B and C need n>=2, D needs
// n>=4 for user-facing input.  Restriction chains pass through smaller
// subsystems (D_3, C_1), so internal validation is laxer.
struct GroupId {
  Family family = Family::A;
  int rank = 1;
  int64_t p = 2;

  enum class Strictness { UserInput, Internal };

  void validate(Strictness s = Strictness::UserInput) const;
  bool operator==(const GroupId& o) const {
    return family == o.family && rank == o.rank && p == o.p;
  }
  bool operator!=(const GroupId& o) const { return !(*this == o); }
  std::string str() const;  // e.g. "A4(p=3)"
  std::string short_str() const;  // e.g. "A4"
};

bool is_prime(int64_t p);

int64_t ipow(int64_t base, int exp);

struct EpsVecHash {
  size_t operator()(const EpsVec& v) const {
    size_t h = 1469598103934665603ull;
    for (int64_t x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace wdeg

#endif
