#pragma once

#include <string>

#include "acp/code.hpp"
#include "acp/form.hpp"

namespace acp {

// Textual element syntax, shared by code files and flag values:
//   "0", "1"          the constants
//   "7"               integer: the element with that value encoding
//                     (for prime fields this is the residue itself)
//   "w" / "w^3"       powers of the canonical primitive element of the level
//   "[c0,c1,...]"     coefficients over the level below, as value integers
std::string format_elem(const Field* level, const Elem& e);
Elem parse_elem(const Field* level, const std::string& token);

std::string format_vector(std::span<const Elem> v);
std::string format_matrix(const Mat& m);

/// A parsed code file: header "additive|linear p k m n" followed by one
/// whitespace-separated row per line. '#' starts a comment.
struct CodeFile {
    bool additive = false;
    FieldTower tower;
    std::size_t n = 0;
    Mat rows;  // top level
};
CodeFile parse_code_text(const std::string& text, const std::string& source_name);
CodeFile parse_code_file(const std::string& path);

/// Builds a FormSpec from flag values: sigma is "id", "antidiag" or a
/// comma-separated 1-based image list; mu is empty (all ones) or a
/// comma-separated element list.
FormSpec parse_form(const FieldTower& t, std::size_t n, const std::string& mu_text,
                    const std::string& sigma_text, unsigned pi_exp);

/// Comma-separated element list at the given level.
std::vector<Elem> parse_elem_list(const Field* level, const std::string& text);

}  // namespace acp
