#include "leibniz/error.hpp"

namespace leibniz {

const char* error_code_name(ErrorCode c) {
	switch (c) {
	case ErrorCode::DimensionMismatch: return "DimensionMismatch";
	case ErrorCode::NotSymmetric: return "NotSymmetric";
	case ErrorCode::Singular: return "Singular";
	case ErrorCode::Degenerate: return "Degenerate";
	case ErrorCode::NotAnIdeal: return "NotAnIdeal";
	case ErrorCode::NotLeftLeibniz: return "NotLeftLeibniz";
	case ErrorCode::NotLie: return "NotLie";
	case ErrorCode::NotQuadraticLie: return "NotQuadraticLie";
	case ErrorCode::NotSkew: return "NotSkew";
	case ErrorCode::ShapeMismatch: return "ShapeMismatch";
	case ErrorCode::ValidationFailed: return "ValidationFailed";
	case ErrorCode::NotCocycle: return "NotCocycle";
	case ErrorCode::NotTwoStepNilpotent: return "NotTwoStepNilpotent";
	case ErrorCode::ConstraintViolated: return "ConstraintViolated";
	case ErrorCode::ConditionFailed: return "ConditionFailed";
	case ErrorCode::NotRepresentation: return "NotRepresentation";
	case ErrorCode::NoSolution: return "NoSolution";
	case ErrorCode::InvarianceMismatch: return "InvarianceMismatch";
	case ErrorCode::UnknownName: return "UnknownName";
	case ErrorCode::Parse: return "Parse";
	case ErrorCode::Internal: return "Internal";
	}
	return "Unknown";
}

}
