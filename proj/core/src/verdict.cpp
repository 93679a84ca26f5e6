#include "cetaev/verdict.hpp"

namespace cetaev {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Certified:
        return "Certified";
    case Verdict::Refuted:
        return "Refuted";
    case Verdict::Inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
}

}  // namespace cetaev
