namespace bsk {}
