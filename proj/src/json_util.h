#pragma once

#include <string>

#include <json.hpp>

#include "eqcoho/errors.h"

namespace eqcoho::detail {

/// Parses JSON text, translating nlohmann's byte offset into a 1-based line/column.
inline nlohmann::json parse_json(const std::string& text)
{
    try {
        return nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        int line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            }
            else {
                ++column;
            }
        }
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + e.what(),
                         line, column);
    }
}

/// Reads `obj[key]` as T, reporting the key on a type or presence mismatch.
template <class T>
T require(const nlohmann::json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"", 0, 0);
    try {
        return obj.at(key).get<T>();
    }
    catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("field \"") + key + "\" has the wrong type", 0, 0);
    }
}

}  // namespace eqcoho::detail
