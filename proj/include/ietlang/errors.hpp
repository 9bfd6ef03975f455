#pragma once

#include <stdexcept>
#include <string>

namespace ietlang {

enum class errc {
    zero_denominator,
    non_square_free_discriminant,
    mixed_discriminants,
    out_of_domain,
    length_mismatch,
    empty_interval,
    standard_slope_violation,
    non_contiguous_group,
    non_contiguous_image,
    mixed_flip_group,
    depth_budget_exceeded,
    window_too_short,
    not_extendable,
    alphabet_too_large,
    misaligned_windows,
    missing_letter,
    order_condition_fails,
    non_recurrent_input,
    anchor_not_endpoint,
    inconsistent_seed,
    divergent_birkhoff_sums,
    truncation_too_coarse,
    no_bispecial_chain,
    unknown_example,
    invalid_argument
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::non_square_free_discriminant: return "NonSquareFreeDiscriminant";
        case errc::mixed_discriminants: return "MixedDiscriminants";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::empty_interval: return "EmptyInterval";
        case errc::standard_slope_violation: return "StandardSlopeViolation";
        case errc::non_contiguous_group: return "NonContiguousGroup";
        case errc::non_contiguous_image: return "NonContiguousImage";
        case errc::mixed_flip_group: return "MixedFlipGroup";
        case errc::depth_budget_exceeded: return "DepthBudgetExceeded";
        case errc::window_too_short: return "WindowTooShort";
        case errc::not_extendable: return "NotExtendable";
        case errc::alphabet_too_large: return "AlphabetTooLarge";
        case errc::misaligned_windows: return "MisalignedWindows";
        case errc::missing_letter: return "MissingLetter";
        case errc::order_condition_fails: return "OrderConditionFails";
        case errc::non_recurrent_input: return "NonRecurrentInput";
        case errc::anchor_not_endpoint: return "AnchorNotEndpoint";
        case errc::inconsistent_seed: return "InconsistentSeed";
        case errc::divergent_birkhoff_sums: return "DivergentBirkhoffSums";
        case errc::truncation_too_coarse: return "TruncationTooCoarse";
        case errc::no_bispecial_chain: return "NoBispecialChain";
        case errc::unknown_example: return "UnknownExample";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace ietlang
