//! The evaluation map Φ into filtered representations: its kernel is
//! exactly the boundary ideal, and its image algebra presents the boundary
//! quotient.
//!
//! Run with: cargo run --example representation_kernels

use gf2phase::corpus::builtin;
use gf2phase::filtrep::{image_algebra, phi_assemble, regular_rep, rep_validate};

fn main() {
    for (name, p) in builtin() {
        let reg = regular_rep(&p);
        assert!(rep_validate(&p, &reg).is_valid());
        let phi = phi_assemble(&p, &[reg]).unwrap();
        println!(
            "{name:<18} kernel dim {:>2}, boundary dim {:>2}, bit-equal: {}",
            phi.kernel.dim(),
            p.boundary_ideal().dim(),
            phi.kernel == p.boundary_ideal()
        );
    }

    // the image algebra of the flagship is a certified presentation of its
    // boundary quotient
    let (_, p) = builtin().swap_remove(3);
    let phi = phi_assemble(&p, &[regular_rep(&p)]).unwrap();
    let image = image_algebra(&phi).unwrap();
    println!(
        "\nflagship image algebra: dim {}, certified equivalent to the quotient: {}",
        image.phase.dim(),
        image.certified
    );
}
