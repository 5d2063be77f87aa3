#include "dilworth/budget.hpp"

#include <cstdlib>
#include <string>

namespace dilworth {

double Budget::default_seconds() {
    if (const char* env = std::getenv("DILWORTH_BUDGET")) {
        try {
            const double s = std::stod(env);
            if (s > 0) {
                return s;
            }
        } catch (const std::exception&) {
        }
    }
    return 60.0;
}

}  // namespace dilworth
