#ifndef QCERT_CERTIFICATE_JSON_HPP
#define QCERT_CERTIFICATE_JSON_HPP

#include <string>

#include "qcert/local_certify.hpp"

namespace qcert {

/// One-line JSON object. Arbitrary-precision integers and rationals are
/// decimal strings ("p/q" for rationals); small counters are JSON numbers.
std::string certificate_json(const SpecializationCertificate& cert, int indent = -1);

/// w, s0, disc_kernel, fundamental_disc, signature, status
std::string certificate_tsv_header();
std::string certificate_tsv_row(const SpecializationCertificate& cert);

}  // namespace qcert

#endif
