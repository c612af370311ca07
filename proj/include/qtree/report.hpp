#pragma once

#include "qtree/io.hpp"
#include "qtree/search.hpp"

#include <string>

namespace qtree::report {

io::Json to_json(const search::SearchReport& r);
/// One row per record, preceded by a `#` header line that carries the config.
std::string to_csv(const search::SearchReport& r, bool with_header = true);
std::string to_text(const search::SearchReport& r);

/// "e|c0 c1 c2 ..." as used in CSV cells.
std::string charfn_cell(const CharFn& f);

}  // namespace qtree::report
