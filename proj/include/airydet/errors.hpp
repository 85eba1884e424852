#ifndef AIRYDET_ERRORS_HPP
#define AIRYDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace airydet {

// Error taxonomy. The CLI maps these onto exit codes:
//   invalid_argument_error / model_not_admissible_error -> 2
//   near_singular_error / endpoint_bracket_error        -> 3
//   io_error                                            -> 4
class invalid_argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class model_not_admissible_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class near_singular_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class endpoint_bracket_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace airydet

#endif
