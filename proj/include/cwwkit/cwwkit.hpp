#pragma once

#include "cwwkit/codebook.hpp"
#include "cwwkit/error.hpp"
#include "cwwkit/feedback_io.hpp"
#include "cwwkit/it2/centroid.hpp"
#include "cwwkit/it2/fou.hpp"
#include "cwwkit/it2/jaccard.hpp"
#include "cwwkit/it2/lwa.hpp"
#include "cwwkit/pipeline.hpp"
#include "cwwkit/report_io.hpp"
#include "cwwkit/symbolic.hpp"
#include "cwwkit/t1_extension.hpp"
#include "cwwkit/two_tuple.hpp"
#include "cwwkit/vocabulary.hpp"
