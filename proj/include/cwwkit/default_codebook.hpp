#pragma once

// Generated from data/codebook.csv; keep the two in sync.

namespace cwwkit {

/// Word codebook shipped with the library (UMF a..d, LMF e..i, LMF height h, stored centroid).
inline constexpr const char* kDefaultCodebookCsv = R"csv(parameter,label,code,a,b,c,d,e,f,g,i,h,c_l,c_r,mean
Time taken to solve the question,Very little,VL,0.00,0.00,0.18,2.63,0.00,0.00,0.09,1.32,1.00,0.44,0.93,0.68
Time taken to solve the question,Small,S,0.59,2.00,3.00,4.41,1.79,2.50,2.50,3.21,0.59,1.88,3.12,2.50
Time taken to solve the question,Moderate,M,1.98,3.75,5.00,6.41,4.29,4.59,4.59,5.21,0.42,3.38,5.38,4.38
Time taken to solve the question,Large,L,4.02,5.65,7.00,8.62,6.40,6.60,6.60,7.10,0.34,5.23,7.60,6.41
Time taken to solve the question,Very Large,VLA,6.05,9.72,10.00,10.00,8.68,9.91,10.00,10.00,1.00,8.53,9.56,9.04
Subject's Knowledge,Very Limited,SVL,0.00,0.00,0.28,3.95,0.00,0.00,0.09,1.32,1.00,0.44,1.47,0.96
Subject's Knowledge,Limited,SL,0.59,2.00,3.00,4.41,1.79,2.50,2.5,3.21,0.59,1.88,3.12,2.50
Subject's Knowledge,Moderate,SM,2.38,4.5,6.50,8.62,4.9,5.32,5.32,5.6,0.26,3.62,7.29,5.46
Subject's Knowledge,Large,SLA,4.38,6.50,8.00,9.62,6.79,7.38,7.38,8.21,0.49,6.16,8.24,7.20
Subject's Knowledge,Very Large,SVLA,7.37,9.73,10.00,10.00,9.34,9.95,10.00,10.00,1.00,8.95,9.78,9.36
Liking towards Subject,Very Less,AVL,0.00,0.00,1.06,2.82,0.00,0.00,1.06,2.33,1.00,0.89,1.04,0.97
Liking towards Subject,Less,AL,2.06,2.95,3.05,5.12,2.06,2.95,3.05,4.12,1.00,3.04,3.39,3.21
Liking towards Subject,Moderate,AM,3.06,4.99,5.06,7.00,3.82,4.99,5.06,6.27,1.00,4.79,5.28,5.03
Liking towards Subject,High,AH,5.46,6.98,7.00,8.54,5.85,6.98,7.00,8.03,1.00,6.83,7.13,6.98
Liking towards Subject,Very High,AVH,7.39,8.99,10.00,10.00,7.71,8.99,10.00,10.00,1.00,9.03,9.13,9.08
Perceived preparation level,Very Less,PVL,0.00,0.00,1.09,2.85,0.00,0.00,1.09,2.19,1.00,0.85,1.05,0.95
Perceived preparation level,Less,PL,1.21,2.99,3.03,4.94,1.69,2.99,3.03,4.24,1.00,2.82,3.21,3.02
Perceived preparation level,Moderate,PM,3.50,4.99,5.03,6.85,3.8,4.99,5.03,6.24,1.00,4.92,5.22,5.07
Perceived preparation level,High,PH,4.97,6.98,7.03,8.28,5.89,6.98,7.03,8.19,1.00,6.72,7.06,6.89
Perceived preparation level,Very High,PVH,7.03,8.98,10.00,10.00,7.62,8.98,10.00,10.00,1.00,8.92,9.10,9.01
Strategy of student,Not Good,SSNG,0.00,0.00,1.01,2.68,0.00,0.00,1.01,2.23,1.00,0.85,0.99,0.92
Strategy of student,Below Average,SSBA,1.36,2.97,3.01,4.64,1.87,2.97,3.01,4.14,1.00,2.83,3.17,3.00
Strategy of student,Average,SSA,3.42,4.95,5.01,6.37,3.97,4.95,5.01,6.18,1.00,4.86,5.1,4.98
Strategy of student,Good,SSG,4.92,6.97,7.00,9.06,5.89,6.97,7.00,8.03,1.00,6.64,7.31,6.98
Strategy of student,Very Good,SSVG,7.16,9.00,10.00,10.00,7.82,9.00,10.00,10.00,1.00,8.96,9.16,9.06
)csv";

}  // namespace cwwkit
