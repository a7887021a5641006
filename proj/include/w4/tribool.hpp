#ifndef W4_TRIBOOL_HPP
#define W4_TRIBOOL_HPP

namespace w4 {

enum class TriBool { False, True, Unknown };

inline const char* to_string(TriBool t) {
    switch (t) {
        case TriBool::False: return "no";
        case TriBool::True: return "yes";
        default: return "unknown";
    }
}

} // namespace w4

#endif
