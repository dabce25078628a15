#pragma once

namespace paracook::harness::templates {

// I/O prompting: parts 1-3; chain-of-thought prompting: parts 1-2.
extern const char* const kIoPart1;
extern const char* const kIoPart2;
extern const char* const kIoPart3;
extern const char* const kCotPart1;
extern const char* const kCotPart2;

}  // namespace paracook::harness::templates
