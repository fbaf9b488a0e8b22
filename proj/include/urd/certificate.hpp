#ifndef URD_CERTIFICATE_HPP
#define URD_CERTIFICATE_HPP

#include <string>

#include <urd/model.hpp>

namespace urd::certificate {

/// Canonical ASCII serialization.  The design is canonicalized first
/// (block orientation, block and class order), so equal designs produce
/// byte-identical documents.
std::string to_json(Design d);

/// Parses a certificate document.  Throws std::runtime_error with a
/// human-readable message on malformed input.
Design from_json(const std::string& text);

void save(const Design& d, const std::string& path);
Design load(const std::string& path);

} // namespace urd::certificate

#endif
