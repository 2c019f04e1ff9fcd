#pragma once

#include <stdexcept>
#include <string>

namespace pbb {

enum class ErrorKind {
  SyntaxError,
  UnpairedCrossing,
  SignMismatch,
  MalformedTable,
  SiteNotFound,
  PatternMismatch,
  DomainMismatch,
  InvalidVariant,
  InvalidColoring,
  IoError,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnpairedCrossing: return "UnpairedCrossing";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::SiteNotFound: return "SiteNotFound";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidVariant: return "InvalidVariant";
    case ErrorKind::InvalidColoring: return "InvalidColoring";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

// FNV-1a, used for content keys (biquandle hashes, GB cache keys).
inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v);

}  // namespace pbb
