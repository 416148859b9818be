#ifndef EHPLAN_COMMON_ERROR_HPP
#define EHPLAN_COMMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ehplan {

// Error categories map onto process exit codes (see tools/ehplan).
enum class ErrorCode : int {
    Config = 2,
    Data = 3,
    Infeasible = 4,
    Solver = 5,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline Error config_error(std::string msg) { return Error(ErrorCode::Config, std::move(msg)); }
inline Error data_error(std::string msg) { return Error(ErrorCode::Data, std::move(msg)); }
inline Error infeasible_error(std::string msg) { return Error(ErrorCode::Infeasible, std::move(msg)); }
inline Error solver_error(std::string msg) { return Error(ErrorCode::Solver, std::move(msg)); }

}  // namespace ehplan

#endif
