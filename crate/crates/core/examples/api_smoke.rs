// scratch: pin down third-party APIs
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use statrs::function::factorial::ln_factorial;
use statrs::distribution::{Discrete, Poisson};

fn main() {
    // hermitian eigen on complex
    let m = DMatrix::from_row_slice(2, 2, &[
        Complex64::new(1.0, 0.0), Complex64::new(0.0, -0.5),
        Complex64::new(0.0, 0.5), Complex64::new(2.0, 0.0),
    ]);
    let eig = m.clone().symmetric_eigen();
    println!("eigvals {:?}", eig.eigenvalues.as_slice());
    let recomposed = &eig.eigenvectors
        * DMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex64::new(x, 0.0)))
        * eig.eigenvectors.adjoint();
    println!("recompose err {}", (recomposed - &m).norm());

    // svd on real
    let g = DMatrix::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
    let svd = g.clone().svd(true, true);
    let pinv = svd.clone().pseudo_inverse(1e-12).unwrap();
    println!("pinv*g {}", (pinv * &g - DMatrix::<f64>::identity(2, 2)).norm());
    println!("sv {:?}", svd.singular_values.as_slice());

    // symmetric tridiagonal eigen for gauss-hermite
    let n = 5usize;
    let mut j = DMatrix::<f64>::zeros(n, n);
    for k in 0..n - 1 {
        let b = ((k + 1) as f64 / 2.0).sqrt();
        j[(k, k + 1)] = b;
        j[(k + 1, k)] = b;
    }
    let eg = j.symmetric_eigen();
    let mut sum_w = 0.0;
    for i in 0..n {
        sum_w += std::f64::consts::PI.sqrt() * eg.eigenvectors[(0, i)].powi(2);
    }
    println!("gh sum weights {} vs sqrt(pi) {}", sum_w, std::f64::consts::PI.sqrt());

    // rng
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    rng.set_stream(3);
    let b = Binomial::new(1_000_000, 0.3).unwrap();
    let k = b.sample(&mut rng);
    println!("binom {}", k);

    // statrs
    println!("lnfac {}", ln_factorial(170));
    let p = Poisson::new(2.25).unwrap();
    println!("poisson pmf {}", p.pmf(3));

    let v = DVector::from_element(3, Complex64::new(1.0, 1.0));
    println!("{}", v.norm());
}
