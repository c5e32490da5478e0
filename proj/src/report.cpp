#include "wulff/report.hpp"

namespace wulff {

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not_applicable";
    }
    return "fail";
}

}  // namespace wulff
