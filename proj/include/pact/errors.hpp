#ifndef PACT_ERRORS_HPP
#define PACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pact {

enum class errc {
  validation,         // malformed space / group / action data
  empty_carrier,      // a construction that needs a nonempty point set got none
  foreign_point,      // point reference outside the space
  empty_set,          // operation undefined on the empty set
  not_a_partition,    // quotient classes do not partition the space
  not_associative,    // multiplication table fails associativity
  no_identity,        // multiplication table has no two-sided identity
  no_inverse,         // some element has no inverse
  carrier_mismatch,   // declared map domain disagrees with the carrier family
  group_mismatch,     // operands built over different groups
  size_limit,         // instance exceeds a configured enumeration cap
  not_open,           // subset required to be open is not
  not_homeomorphism,  // map required to be a homeomorphism is not
  structural,         // action data is structurally unusable
  generation,         // random instance generation exhausted its retry budget
  parse,              // instance file could not be parsed
  unknown_check,      // no checker registered under the requested id
  usage,              // bad command line
  internal,           // broken internal invariant (two routes disagreed)
};

class Error : public std::runtime_error {
 public:
  Error(errc kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) {
  throw Error(kind, what);
}

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::validation: return "validation";
    case errc::empty_carrier: return "empty-carrier";
    case errc::foreign_point: return "foreign-point";
    case errc::empty_set: return "empty-set";
    case errc::not_a_partition: return "not-a-partition";
    case errc::not_associative: return "not-associative";
    case errc::no_identity: return "no-identity";
    case errc::no_inverse: return "no-inverse";
    case errc::carrier_mismatch: return "carrier-mismatch";
    case errc::group_mismatch: return "group-mismatch";
    case errc::size_limit: return "size-limit";
    case errc::not_open: return "not-open";
    case errc::not_homeomorphism: return "not-homeomorphism";
    case errc::structural: return "structural";
    case errc::generation: return "generation-exhausted";
    case errc::parse: return "parse";
    case errc::unknown_check: return "unknown-check";
    case errc::usage: return "usage";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace pact

#endif
