#pragma once

// JSON form of interpolation certificates.

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "stlc/interpolate.hpp"

namespace stlc {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fields: input, M, l, r, vocab_report, trace, verdict. The verdict is the
// outcome of verify_certificate at the time of writing.
nlohmann::json to_json(const Certificate& c, const Report& report);
// Reads back everything but vocab_report and verdict, which are recomputed
// by verification. Throws CertificateFormatError or ParseError.
Certificate certificate_from_json(const nlohmann::json& doc);

}  // namespace stlc
