#ifndef QCERT_ERROR_HPP
#define QCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qcert {

enum class ErrorCode {
  invalid_argument,
  incomplete_factorization,
  negative_kernel,
  wild_prime,
  inconclusive_reduction,
  element_not_in_group,
  witness_not_found,
  degenerate_parameter,
  branch_point,
  not_coprime,
  window_empty,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
  : std::runtime_error(what), code_(code)
  {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace qcert

#endif
