#pragma once

#include <stdexcept>
#include <string>

namespace cfkit {

// Broad failure classes, used to map errors onto process exit codes.
enum class ErrorKind { usage, data, backend };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class BackendError : public Error {
public:
    explicit BackendError(const std::string& what) : Error(ErrorKind::backend, what) {}
};

// --- data errors ---

class IoError : public DataError {
public:
    explicit IoError(const std::string& what) : DataError(what) {}
};

class SchemaError : public DataError {
public:
    explicit SchemaError(const std::string& what) : DataError(what) {}
};

class DimMismatchError : public DataError {
public:
    explicit DimMismatchError(const std::string& what) : DataError(what) {}
};

class ZeroNormError : public DataError {
public:
    explicit ZeroNormError(const std::string& what) : DataError(what) {}
};

class DegenerateDirectionError : public DataError {
public:
    explicit DegenerateDirectionError(const std::string& what) : DataError(what) {}
};

class LinkageError : public DataError {
public:
    explicit LinkageError(const std::string& what) : DataError(what) {}
};

class CoverageError : public DataError {
public:
    explicit CoverageError(const std::string& what) : DataError(what) {}
};

class EmptyInputError : public DataError {
public:
    explicit EmptyInputError(const std::string& what) : DataError(what) {}
};

class EmptyGalleryError : public DataError {
public:
    explicit EmptyGalleryError(const std::string& what) : DataError(what) {}
};

class UnevenRatersError : public DataError {
public:
    explicit UnevenRatersError(const std::string& what) : DataError(what) {}
};

class DegenerateAgreementError : public DataError {
public:
    explicit DegenerateAgreementError(const std::string& what) : DataError(what) {}
};

class ZeroVarianceError : public DataError {
public:
    explicit ZeroVarianceError(const std::string& what) : DataError(what) {}
};

class LengthMismatchError : public DataError {
public:
    explicit LengthMismatchError(const std::string& what) : DataError(what) {}
};

class TooFewSamplesError : public DataError {
public:
    explicit TooFewSamplesError(const std::string& what) : DataError(what) {}
};

class ConfigError : public UsageError {
public:
    explicit ConfigError(const std::string& what) : UsageError(what) {}
};

// --- backend errors ---

class MaskCountError : public BackendError {
public:
    explicit MaskCountError(const std::string& what) : BackendError(what) {}
};

class DecodeError : public BackendError {
public:
    explicit DecodeError(const std::string& what) : BackendError(what) {}
};

class TaggerError : public BackendError {
public:
    explicit TaggerError(const std::string& what) : BackendError(what) {}
};

class AllCandidatesFailedError : public BackendError {
public:
    explicit AllCandidatesFailedError(const std::string& what) : BackendError(what) {}
};

class PairGenerationFailedError : public BackendError {
public:
    explicit PairGenerationFailedError(const std::string& what) : BackendError(what) {}
};

} // namespace cfkit
