/* length of a string */
int my_strlen(const char *buf)
{
    int l = 0;
    while (buf[l] != '\0')
        l++;
    return l;
}

int main()
{
    char buf[1000];
    scanf("%s", buf);
    printf("%d\n", my_strlen(buf));
    return 0;
}
