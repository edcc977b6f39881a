"""Pure-Python kernels. Reference semantics for the compiled ``_kernels`` module."""


def twisted_class_labels(product, inverse, phi):
    """Label each element by the least index of its class under ``x ~ phi(a) x a^-1``."""
    n = len(product)
    labels = [-1] * n
    for x in range(n):
        if labels[x] >= 0:
            continue
        for a in range(n):
            y = product[product[phi[a]][x]][inverse[a]]
            if labels[y] < 0:
                labels[y] = x
    return labels


def is_associative(product):
    n = len(product)
    for a in range(n):
        row_a = product[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = product[ab]
            row_b = product[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    return False
    return True


def grmat_mul(A, B, product):
    """Product of matrices over Z[G] stored densely as ``[row][col][element]`` lists."""
    n = len(A)
    k = len(B)
    m = len(B[0]) if k else 0
    order = len(product)
    out = [[[0] * order for _ in range(m)] for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            nz_a = [(g, c) for g, c in enumerate(a) if c]
            if not nz_a:
                continue
            Bt = B[t]
            for j in range(m):
                b = Bt[j]
                nz_b = [(h, d) for h, d in enumerate(b) if d]
                if not nz_b:
                    continue
                acc = out[i][j]
                for g, c in nz_a:
                    row = product[g]
                    for h, d in nz_b:
                        acc[row[h]] += c * d
    return out
