#pragma once
#include <string>
#include <string_view>

namespace smartvector {

// SHA-256 of the UTF-8 bytes, lowercase hex. Content-hash only; keeping it
// local keeps the installed library free of link-time dependencies.
std::string sha256_hex(std::string_view data);

}  // namespace smartvector
