#pragma once

#include <stdexcept>
#include <string>

namespace wvlab {

enum class Errc {
    invalid_truncation = 1,
    truncation_risk,
    domain,
    dimension,
    degenerate_selection,
    orthogonal_selection,
    config,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace wvlab
