#include "fintop/errors.hpp"

namespace fintop {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::missing_empty: return "MissingEmpty";
        case Errc::missing_full: return "MissingFull";
        case Errc::not_closed_under_union: return "NotClosedUnderUnion";
        case Errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::too_many_points: return "TooManyPoints";
        case Errc::same_point: return "SamePoint";
        case Errc::not_continuous: return "NotContinuous";
        case Errc::codomain_mismatch: return "CodomainMismatch";
        case Errc::partition_mismatch: return "PartitionMismatch";
        case Errc::not_closed: return "NotClosed";
        case Errc::empty_collapse_set: return "EmptyCollapseSet";
        case Errc::codomain_not_hausdorff: return "CodomainNotHausdorff";
        case Errc::domain_mismatch: return "DomainMismatch";
        case Errc::not_constant_on_block: return "NotConstantOnBlock";
        case Errc::not_hausdorff_domain: return "NotHausdorffDomain";
        case Errc::not_hausdorff_codomain: return "NotHausdorffCodomain";
        case Errc::invalid_bound: return "InvalidBound";
        case Errc::limit_exceeded: return "LimitExceeded";
        case Errc::invalid_parameter: return "InvalidParameter";
        case Errc::parse_error: return "SyntaxError";
    }
    return "UnknownError";
}

}  // namespace fintop
