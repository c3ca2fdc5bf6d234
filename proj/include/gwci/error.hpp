#pragma once

#include <stdexcept>
#include <string>

namespace gwci {

enum class errc {
    variable_mismatch,
    syntax_error,
    unknown_variable,
    wrong_count,
    not_homogeneous,
    not_zero_dimensional,
    not_in_ideal,
    shape_mismatch,
    not_a_complex,
    not_gwci,
    length_exceeds_s,
    degree_out_of_range,
    nonpositive_denominator,
    not_g_homogeneous,
    not_k_coefficient,
    degree_mismatch,
    schema_violation,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace gwci
