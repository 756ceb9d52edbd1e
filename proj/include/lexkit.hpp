#ifndef LEXKIT_HPP
#define LEXKIT_HPP

// Everything except the HTTP layer (lexkit/service.hpp), which needs
// cpp-httplib and a thread library.

#include "lexkit/annotation.hpp"
#include "lexkit/colex.hpp"
#include "lexkit/core.hpp"
#include "lexkit/embedding.hpp"
#include "lexkit/error.hpp"
#include "lexkit/eval.hpp"
#include "lexkit/methods.hpp"
#include "lexkit/random.hpp"
#include "lexkit/scorer.hpp"
#include "lexkit/session.hpp"
#include "lexkit/synonym.hpp"
#include "lexkit/unicode.hpp"

#endif
