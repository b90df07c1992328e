#pragma once

#include <string>

namespace tupleqa::text {

// Classic Porter suffix-stripping stemmer for lowercase ASCII words.
// Words shorter than three letters or containing non-alphabetic
// characters are returned unchanged.
std::string porter_stem(const std::string& word);

}  // namespace tupleqa::text
