/* expect 3:11 */
struct flags {
    int a : 3;
};
