struct node {
    int key;
    union {
        int i;
        float f;
    } payload;
    struct node *left, *right;
};
int depth(struct node *t)
{
    int l, r;
    if (!t)
        return 0;
    l = depth(t->left);
    r = depth(t->right);
    return 1 + (l > r ? l : r) + t->payload.i;
}
