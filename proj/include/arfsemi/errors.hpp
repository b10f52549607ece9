#ifndef ARFSEMI_ERRORS_HPP_
#define ARFSEMI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace arfsemi {

  // Malformed input: empty generator lists, non-positive entries, gcd != 1,
  // element lists that are not additively closed.
  class input_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A precondition on a well-formed semigroup failed, e.g. a non-Arf
  // semigroup passed to an Arf-only operation.
  class domain_error : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  // Refusal to run an enumeration whose size would be unreasonable.
  class limit_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace arfsemi

#endif  // ARFSEMI_ERRORS_HPP_
