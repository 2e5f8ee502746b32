#ifndef ARGFORGE_STEM_HPP
#define ARGFORGE_STEM_HPP

#include <string>
#include <string_view>
#include <vector>

namespace argforge {

// Porter's stemming algorithm (1980). Input is lowercased first;
// non-alphabetic tokens are returned unchanged apart from lowercasing.
std::string porter_stem(std::string_view word);

// Lowercase, stem each token, rejoin with single spaces.
std::string stem_phrase(std::string_view phrase);

std::vector<std::string> stem_tokens(const std::vector<std::string>& tokens);

} // namespace argforge

#endif
