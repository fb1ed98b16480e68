#ifndef HORIZON_DATA_IO_HPP
#define HORIZON_DATA_IO_HPP

#include <string>

#include "horizon/initial_data.hpp"

namespace horizon {

/// Loads an initial data set from a JSON document of the form
///
///   {
///     "label": "my data",
///     "coords": [{"name": "x", "min": -1.0, "max": 1.0}, ...],
///     "params": {"m": 1.0},
///     "sigma": [["expr", ...], ...],
///     "V": ["expr", ...]
///   }
///
/// sigma is a full matrix of expression strings (entries across the diagonal
/// must parse to equal trees) or an upper triangle with "" below. Expression
/// syntax errors and malformed JSON raise ParseError with a byte offset.
InitialDataSet parse_initial_data(const std::string& text);
InitialDataSet load_initial_data(const std::string& path);

}  // namespace horizon

#endif
