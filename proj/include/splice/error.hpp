#ifndef SPLICE_ERROR_HPP
#define SPLICE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace splice {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text-format errors carry the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}
    // "<source>:<line>: <what>"
    ParseError(const std::string& source, int line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line), detail_(what) {}
    int line() const { return line_; }
    const std::string& detail() const { return detail_; }

private:
    int line_;
    std::string detail_;
};

class InvalidInput : public Error { using Error::Error; };
class NotRankOne : public Error { using Error::Error; };
class DegreeMismatch : public Error { using Error::Error; };
class SearchBudgetExceeded : public Error { using Error::Error; };
class InvalidCone : public Error { using Error::Error; };
class HypothesisFailed : public Error { using Error::Error; };
class NotBlowdownable : public Error { using Error::Error; };
class NoClasp : public Error { using Error::Error; };
class InadmissibleWord : public Error { using Error::Error; };
class OutOfRange : public Error { using Error::Error; };
class NotType1 : public Error { using Error::Error; };

}  // namespace splice

#endif
