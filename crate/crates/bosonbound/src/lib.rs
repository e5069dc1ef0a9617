use ndarray::array;
use ndarray_linalg::{Eig, SVD, QR, Eigh, UPLO};
use num_complex::Complex64;

pub fn probe() {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let a = array![[c(0.0,0.0), c(1.0,0.0)], [c(-1.0,0.0), c(0.0,0.0)]];
    let (vals, _vecs) = a.eig().unwrap();
    println!("eig: {:?}", vals);
    let (_u, s, _vt) = a.svd(true, true).unwrap();
    println!("svd: {:?}", s);
    let (q, r) = a.qr().unwrap();
    println!("qr: {:?} {:?}", q[[0,0]], r[[0,0]]);
    let h = array![[c(1.0,0.0), c(0.0,-1.0)], [c(0.0,1.0), c(2.0,0.0)]];
    let (w, _v) = h.eigh(UPLO::Lower).unwrap();
    println!("eigh: {:?}", w);
}

#[cfg(test)]
mod tests {
    #[test]
    fn linalg_links() { super::probe(); }
}
