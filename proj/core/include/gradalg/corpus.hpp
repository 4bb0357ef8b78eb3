#pragma once

// Built-in input files for the worked examples shipped with the tool.

#include <string>
#include <string_view>
#include <vector>

namespace gradalg {

struct CorpusFile {
  std::string filename;
  std::string text;
};

/// Every built-in file, in a fixed order.
const std::vector<CorpusFile>& corpus();

/// Text of one built-in file; throws InvalidInput for an unknown name.
const std::string& corpus_text(std::string_view filename);

}  // namespace gradalg
