#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

enum class errc {
    invalid_input,
    invalid_digit_set,
    collinear_digits,
    digits_not_primitive,
    not_expansive,
    singular_matrix,
    zero_frequency,
    dimension_mismatch,
    not_spectral,
    not_admissible,
    level_too_large,
    invalid_pick,
    choice_out_of_range,
    non_integer_frequency,
    resource_cap,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_input: return "InvalidInput";
        case errc::invalid_digit_set: return "InvalidDigitSet";
        case errc::collinear_digits: return "CollinearDigits";
        case errc::digits_not_primitive: return "DigitsNotPrimitive";
        case errc::not_expansive: return "NotExpansive";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::zero_frequency: return "ZeroFrequency";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::not_spectral: return "NotSpectral";
        case errc::not_admissible: return "NotAdmissible";
        case errc::level_too_large: return "LevelTooLarge";
        case errc::invalid_pick: return "InvalidPick";
        case errc::choice_out_of_range: return "ChoiceOutOfRange";
        case errc::non_integer_frequency: return "NonIntegerFrequency";
        case errc::resource_cap: return "ResourceCap";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace spectral
