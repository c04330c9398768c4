#pragma once

#include <string>
#include <string_view>

namespace imlab {

// Escapes backslashes and quotes for embedding in a JSON string literal.
// graph6 bytes live in 63..126, so '\\' (92) occurs in real ids.
inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '\\' || c == '"') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace imlab
