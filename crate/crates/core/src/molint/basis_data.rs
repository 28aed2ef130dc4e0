//! Embedded Gaussian basis tables.
//!
//! The format is the same plain-text layout accepted for user-supplied
//! basis files, so extending coverage to a new element is a data edit:
//!
//! ```text
//! basis <NAME>
//! element <SYMBOL>
//! S <n-primitives>
//!   <exponent> <s-coefficient>
//! SP <n-primitives>
//!   <exponent> <s-coefficient> <p-coefficient>
//! ```
//!
//! Exponents are in bohr^-2; coefficients refer to normalized primitives.
//! Contracted functions are renormalized to unit self-overlap on load, so
//! tables may be entered exactly as published.

pub const EMBEDDED_BASIS_TABLES: &str = r#"
basis STO-3G
element H
S 3
  3.42525091   0.15432897
  0.62391373   0.53532814
  0.16885540   0.44463454
element He
S 3
  6.36242139   0.15432897
  1.15892300   0.53532814
  0.31364979   0.44463454
element Be
S 3
  30.16787069  0.15432897
  5.495115306  0.53532814
  1.487192653  0.44463454
SP 3
  1.314833110   -0.09996723   0.15591627
  0.3055389383   0.39951283   0.60768372
  0.0993707456   0.70011547   0.39195739
element O
S 3
  130.7093200  0.15432897
  23.80886100  0.53532814
  6.443608300  0.44463454
SP 3
  5.033151300  -0.09996723   0.15591627
  1.169596100   0.39951283   0.60768372
  0.380389000   0.70011547   0.39195739

basis 6-31G
element H
S 3
  18.73113696  0.03349460434
  2.825394365  0.2347269535
  0.6401216923 0.8137573261
S 1
  0.1612777588 1.0
element He
S 3
  38.42163400  0.04013973935
  5.778030000  0.2612460970
  1.241774000  0.7931846246
S 1
  0.2979640000 1.0
element Be
S 6
  1264.585690  0.001944757590
  189.9368060  0.01483505200
  43.15908900  0.07209054629
  12.09866270  0.2371541500
  3.806323220  0.4691986519
  1.272890300  0.3565202279
SP 3
  3.196463098  -0.1126487285  0.05598019980
  0.7478133038 -0.2295064079  0.2615506110
  0.2199663302  1.186916764   0.7939723389
SP 1
  0.0823099007  1.0  1.0
element O
S 6
  5484.671660  0.001831074430
  825.2349460  0.01395017220
  188.0469580  0.06844507810
  52.96450000  0.2327143360
  16.89757040  0.4701928980
  5.799635340  0.3585208530
SP 3
  15.53961625  -0.1107775495  0.07087426823
  3.599933586  -0.1480262627  0.3397528391
  1.013761750   1.130767015   0.7271585773
SP 1
  0.2700058226  1.0  1.0
"#;
