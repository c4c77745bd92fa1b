#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wap/words.hpp"

namespace wap {

/// A parsed word description. Grammar:
///   morphic:<img0>/<img1>[/<img2>]@<start>
///   toeplitz:<pattern>          pattern over {0,1,2,?}
///   named:<name>                see named_words()
///   periodic:<word>
///   file:<path>                 digits, whitespace ignored; finite
struct WordSpec {
  std::string text;
  std::string kind;
  std::optional<Morphism> morphism;  // morphic specs only
  Letter start = 0;
  WordStream stream;
};

/// Throws InputError on malformed text.
WordSpec parse_word_spec(std::string_view text);

}  // namespace wap
