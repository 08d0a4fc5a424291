#pragma once
#include <stdexcept>
#include <string>

namespace leibniz {

enum class ErrorCode {
	DimensionMismatch,
	NotSymmetric,
	Singular,
	Degenerate,
	NotAnIdeal,
	NotLeftLeibniz,
	NotLie,
	NotQuadraticLie,
	NotSkew,
	ShapeMismatch,
	ValidationFailed,
	NotCocycle,
	NotTwoStepNilpotent,
	ConstraintViolated,
	ConditionFailed,
	NotRepresentation,
	NoSolution,
	InvarianceMismatch,
	UnknownName,
	Parse,
	Internal
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
	Error(ErrorCode c, const std::string& msg)
		: std::runtime_error(std::string(error_code_name(c)) + ": " + msg), code_(c) {}
	ErrorCode code() const { return code_; }
private:
	ErrorCode code_;
};

}
