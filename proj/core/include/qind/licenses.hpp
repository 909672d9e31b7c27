#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qind {

// Small bundled license knowledge: common SPDX ids, OSI approval, and
// full-text markers for sniffing LICENSE/COPYING files.
bool is_known_spdx_id(std::string_view id);
bool is_osi_approved(std::string_view id);

// Guesses the SPDX id of a license text from characteristic title lines.
std::optional<std::string> detect_license_id(std::string_view text);

// Extracts ids from an SPDX expression ("MIT OR Apache-2.0" -> both).
std::vector<std::string> spdx_expression_ids(std::string_view expression);

// First "SPDX-License-Identifier:" tag in a file head, if any.
std::optional<std::string> find_spdx_tag(std::string_view file_head);

}  // namespace qind
