#include "owj/error.hpp"

namespace owj {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::syntax_error: return "SyntaxError";
        case Errc::duplicate_state: return "DuplicateState";
        case Errc::duplicate_symbol: return "DuplicateSymbol";
        case Errc::out_of_range_reference: return "OutOfRangeReference";
        case Errc::duplicate_transition: return "DuplicateTransition";
        case Errc::missing_start: return "MissingStart";
        case Errc::alphabet_mismatch: return "AlphabetMismatch";
        case Errc::already_halted: return "AlreadyHalted";
        case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
        case Errc::unsupported_engine: return "UnsupportedEngine";
        case Errc::insufficient_data: return "InsufficientData";
        case Errc::bound_violation: return "BoundViolation";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::bounds_exceed_sample: return "BoundsExceedSample";
        case Errc::state_cap_exceeded: return "StateCapExceeded";
        case Errc::not_complete: return "NotComplete";
        case Errc::unknown_family: return "UnknownFamily";
        case Errc::bad_parameter: return "BadParameter";
    }
    return "Error";
}

const char* errc_module(Errc c) {
    switch (c) {
        case Errc::syntax_error:
        case Errc::duplicate_state:
        case Errc::duplicate_symbol:
        case Errc::out_of_range_reference:
        case Errc::duplicate_transition:
        case Errc::missing_start:
        case Errc::alphabet_mismatch:
            return "core";
        case Errc::already_halted:
        case Errc::search_budget_exceeded:
        case Errc::unsupported_engine:
            return "engines";
        case Errc::insufficient_data:
        case Errc::bound_violation:
            return "analysis";
        case Errc::cap_exceeded:
        case Errc::bounds_exceed_sample:
        case Errc::state_cap_exceeded:
        case Errc::not_complete:
        case Errc::unknown_family:
        case Errc::bad_parameter:
            return "langtools";
    }
    return "owj";
}

} // namespace owj
