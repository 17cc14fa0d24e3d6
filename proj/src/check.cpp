#include "hyperchain/check.hpp"

namespace hyperchain {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ExpectedFail: return "expected-fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

} // namespace hyperchain
