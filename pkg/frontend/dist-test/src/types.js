/** Wire formats of the session service. */
export {};
