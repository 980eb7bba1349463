#pragma once

#include <stdexcept>
#include <string>

namespace k0forge {

// Exit-code-bearing error categories used across the library and the CLI.
struct InvalidParams : std::runtime_error {
    explicit InvalidParams(const std::string& what) : std::runtime_error(what) {}
};

struct CertificateFailure : std::runtime_error {
    explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyWindow : std::runtime_error {
    explicit EmptyWindow(const std::string& what) : std::runtime_error(what) {}
};

// x cannot be tested against the cone within the computed stage horizon.
struct NotRepresentable : std::runtime_error {
    explicit NotRepresentable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace k0forge
