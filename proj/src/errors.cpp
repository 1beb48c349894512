#include "rllsidc/errors.hpp"

namespace rllsidc {

std::string_view to_string(Constraint c) noexcept {
    switch (c) {
        case Constraint::message_length_too_small: return "message_length_too_small";
        case Constraint::message_length_too_large: return "message_length_too_large";
        case Constraint::run_length_below_rhat: return "run_length_below_rhat";
        case Constraint::d_out_of_range: return "d_out_of_range";
        case Constraint::excluded_triple: return "excluded_triple";
        case Constraint::b_out_of_range: return "b_out_of_range";
        case Constraint::rhat_too_small: return "rhat_too_small";
        case Constraint::front_run_length_too_small: return "front_run_length_too_small";
        case Constraint::front_length_too_small: return "front_length_too_small";
        case Constraint::front_length_exceeds_bound: return "front_length_exceeds_bound";
        case Constraint::front_length_not_injective: return "front_length_not_injective";
    }
    return "unknown";
}

}  // namespace rllsidc
